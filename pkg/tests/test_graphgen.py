"""
시험 행렬 생성기 테스트
"""
import numpy as np
import pytest

from dqeig.algebra.dual import DualComplex, DualNumber
from dqeig.algebra.dual_quaternion import DQ_ONE, DualQuaternion
from dqeig.algebra.quaternion import Quaternion
from dqeig.errors import InputError
from dqeig.graphgen import (
    complex_dominant_spectrum,
    cycle_laplacian,
    infinite_eigenvalue_example,
    jordan_experiment_matrix,
    leading_spectrum,
    non_necessity_example,
    prescribed_spectrum_matrix,
    rand_unit_dq,
    random_invertible,
    size_sweep_spectrum,
    wheel_laplacian,
)
from dqeig.linalg.matrix import DQMatrix, DQVector, residual_2R


def test_rand_unit_dq_is_deterministic():
    a = rand_unit_dq(np.random.default_rng(42))
    b = rand_unit_dq(np.random.default_rng(42))
    assert a == b
    assert a.magnitude().isclose(DualNumber(1.0, 0.0))


@pytest.mark.parametrize("balanced", [True, False])
@pytest.mark.parametrize("n", [3, 4, 7])
def test_cycle_structure(n, balanced, rng):
    graph, lap = cycle_laplacian(n, rng, balanced=balanced)

    assert len(graph.arcs) == n
    assert graph.out_degree == [1] * n
    for i, j, w in graph.arcs:
        assert j == (i + 1) % n
        assert w.is_unit(atol=1e-12)
        assert lap[i, j].distance(-w) <= 1e-15
    assert np.allclose(lap.std[np.arange(n), np.arange(n)], [[1, 0, 0, 0]] * n)
    assert graph.balanced is balanced


@pytest.mark.parametrize("n", [3, 4, 6])
def test_balanced_cycle_product_is_one(n, rng):
    graph, _ = cycle_laplacian(n, rng, balanced=True)
    assert graph.cycle_product(list(range(n))).distance(DQ_ONE) <= 1e-12


def test_unbalanced_cycle_product_is_generic(rng):
    graph, _ = cycle_laplacian(4, rng, balanced=False)
    assert graph.cycle_product([0, 1, 2, 3]).distance(DQ_ONE) > 1e-6


@pytest.mark.parametrize("builder, n", [(cycle_laplacian, 4), (cycle_laplacian, 5), (wheel_laplacian, 4), (wheel_laplacian, 6)])
def test_balanced_laplacian_is_gauge_similar(builder, n, rng):
    graph, lap = builder(n, rng, balanced=True)
    u = graph.gauge_matrix()
    assert (u @ graph.underlying_laplacian() @ u.H).allclose(lap, atol=1e-12)
    assert (u @ u.H).allclose(DQMatrix.identity(n), atol=1e-12)


def test_wheel_structure(rng):
    n = 5
    graph, lap = wheel_laplacian(n, rng, balanced=True)
    center = n - 1

    assert len(graph.arcs) == 2 * (n - 1)
    assert graph.out_degree == [1, 1, 1, 1, n - 1]
    assert lap[center, center].distance(DualQuaternion.real(n - 1.0)) <= 1e-15
    for j in range(n - 1):
        assert graph.weight(center, j).is_unit(atol=1e-12)
    # 균형 그래프에서는 경로 곱이 끝점에만 의존
    path = graph.weight(center, 0) * graph.weight(0, 1)
    assert path.distance(graph.weight(center, 1)) <= 1e-12


def test_generators_are_deterministic():
    _, a = wheel_laplacian(5, np.random.default_rng(9))
    _, b = wheel_laplacian(5, np.random.default_rng(9))
    assert np.array_equal(a.std, b.std) and np.array_equal(a.dual, b.dual)


@pytest.mark.parametrize("builder, n", [(cycle_laplacian, 2), (wheel_laplacian, 3)])
def test_too_small_graphs(builder, n, rng):
    with pytest.raises(InputError):
        builder(n, rng)


def test_random_invertible(rng):
    p, p_inv = random_invertible(6, rng)
    assert (p @ p_inv).allclose(DQMatrix.identity(6), atol=1e-9)


def test_prescribed_spectrum_columns_are_eigenvectors(rng):
    eigs = [DualComplex(2.0, 1.0), DualComplex(1 + 1j, 0.5), DualComplex(-0.5, 2j)]
    a, p = prescribed_spectrum_matrix(eigs, rng)
    for k, lam in enumerate(eigs):
        column = DQVector(p.std[:, k], p.dual[:, k])
        assert residual_2R(a, column, DualQuaternion.from_dual_complex(lam)) <= 1e-9


def test_prescribed_spectrum_rejects_empty(rng):
    with pytest.raises(InputError):
        prescribed_spectrum_matrix([], rng)


def test_spectrum_helpers():
    assert size_sweep_spectrum(4) == [DualComplex(1.5, 1.0)] + [DualComplex(1.0, 1.0)] * 3
    assert complex_dominant_spectrum(2) == [DualComplex(2 + 1j, 1.0), DualComplex(1 + 1j, 1.0)]
    with pytest.raises(InputError):
        leading_spectrum(0, DualComplex(1.0), DualComplex(1.0))


@pytest.mark.parametrize("n21", [0, 10, -1])
def test_jordan_block_size_range(n21, rng):
    with pytest.raises(InputError):
        jordan_experiment_matrix(10, n21, rng)


def test_jordan_matrix_shape(rng):
    a = jordan_experiment_matrix(6, 3, rng)
    assert a.shape == (6, 6)
    assert np.isfinite(a.std).all() and np.isfinite(a.dual).all()


@pytest.mark.parametrize("alpha", [Quaternion(3.0), Quaternion(0.0, 1.0), Quaternion(0.5, -1.0, 2.0, 0.25)])
def test_three_by_three_examples_are_eigenpairs(alpha):
    for build in (non_necessity_example, infinite_eigenvalue_example):
        a, lam, v = build(alpha)
        assert residual_2R(a, v, lam) <= 1e-14
