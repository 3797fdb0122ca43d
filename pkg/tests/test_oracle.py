"""
표준 고윳값, 가정 판정, 고유쌍 검증 테스트
"""
import math

import numpy as np
import pytest

from dqeig.algebra.dual import DualComplex
from dqeig.algebra.dual_quaternion import DualQuaternion
from dqeig.algebra.quaternion import J, Quaternion
from dqeig.eig import power_method, random_initial_vector
from dqeig.errors import DegenerateSpectrumError, DimensionError, InputError
from dqeig.graphgen import (
    cycle_laplacian,
    infinite_eigenvalue_example,
    jordan_experiment_matrix,
    non_necessity_example,
    prescribed_spectrum_matrix,
    wheel_laplacian,
)
from dqeig.linalg.matrix import DQMatrix, DQVector
from dqeig.oracle import (
    analytic_cycle_spectrum,
    analytic_wheel_spectrum,
    assumption_report,
    complex_eigs,
    sort_spectrum,
    standard_eigs,
    standard_form,
    verify_eigenpair,
)
from dqeig.oracle.qr import balance, hessenberg


def _same_multiset(a, b, atol=1e-8) -> bool:
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        return False
    return all(np.min(np.abs(b - z)) <= atol for z in a) and all(np.min(np.abs(a - z)) <= atol for z in b)


# ---- complex_eigs ----

def test_diagonal_eigenvalues():
    assert np.allclose(sort_spectrum(complex_eigs(np.diag([3.0, 1.0, 1.0]))), [3, 1, 1])


def test_circulant_eigenvalues():
    shift = np.roll(np.eye(4), 1, axis=1)
    eigs = complex_eigs(np.eye(4) - shift)
    assert _same_multiset(eigs, [0, 1 - 1j, 2, 1 + 1j])


def test_companion_eigenvalues():
    eigs = complex_eigs(np.array([[2.0, -2.0], [1.0, 0.0]]))
    assert _same_multiset(eigs, [1 + 1j, 1 - 1j], atol=1e-12)


@pytest.mark.parametrize("seed", range(8))
@pytest.mark.parametrize("n", [1, 2, 5, 12, 30])
def test_qr_agrees_with_lapack(seed, n):
    rng = np.random.default_rng(seed)
    m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    scale = max(1.0, np.linalg.norm(m))
    assert _same_multiset(complex_eigs(m), complex_eigs(m, method="lapack"), atol=1e-9 * scale)


def test_balance_and_hessenberg_are_similarities(rng):
    m = rng.standard_normal((6, 6)) * np.logspace(-3, 3, 6)
    h = hessenberg(balance(m))
    assert np.allclose(np.tril(h, -2), 0.0)
    assert _same_multiset(np.linalg.eigvals(h), np.linalg.eigvals(m), atol=1e-8 * np.linalg.norm(m))


def test_complex_eigs_input_checks():
    with pytest.raises(DimensionError):
        complex_eigs(np.ones((2, 3)))
    with pytest.raises(ValueError):
        complex_eigs(np.eye(2), method="unknown")
    assert complex_eigs(np.zeros((0, 0))).size == 0


# ---- standard_eigs ----

def test_standard_eigs_of_balanced_cycle4():
    _, lap = cycle_laplacian(4, np.random.default_rng(7))
    assert np.allclose(standard_eigs(lap), [2, 1 + 1j, 1 + 1j, 0], atol=1e-10)


def test_standard_eigs_of_j():
    assert np.allclose(standard_eigs(DQMatrix.from_entries([[DualQuaternion(J)]])), [1j])


def test_standard_eigs_of_prescribed_spectrum(rng):
    eigs = [DualComplex(2.0, 1.0), DualComplex(1.0, 1.0), DualComplex(1.0, 1.0)]
    a, _ = prescribed_spectrum_matrix(eigs, rng)
    assert np.allclose(standard_eigs(a), [2, 1, 1], atol=1e-8)


def test_standard_eigs_lapack_method_matches(rng):
    _, lap = wheel_laplacian(6, rng)
    assert np.allclose(standard_eigs(lap), standard_eigs(lap, method="lapack"), atol=1e-9)


def test_standard_eigs_rejects_non_square(rng):
    with pytest.raises(InputError):
        standard_eigs(DQMatrix(rng.standard_normal((2, 3, 4))))


@pytest.mark.parametrize("n", [3, 4, 5, 8, 17, 32, 64])
def test_cycle_spectrum_matches_analytic(n):
    _, lap = cycle_laplacian(n, np.random.default_rng(n))
    assert _same_multiset(standard_eigs(lap), standard_form(analytic_cycle_spectrum(n)), atol=1e-7)


def test_analytic_cycle3_values():
    expected = [1.5 + math.sqrt(3) / 2 * 1j, 1.5 + math.sqrt(3) / 2 * 1j, 0]
    assert np.allclose(standard_form(analytic_cycle_spectrum(3)), expected)


@pytest.mark.parametrize("n", [4, 5, 7, 16, 33, 64])
def test_wheel_spectrum_matches_analytic(n):
    _, lap = wheel_laplacian(n, np.random.default_rng(n))
    eigs = standard_eigs(lap)
    assert _same_multiset(eigs, standard_form(analytic_wheel_spectrum(n)), atol=1e-7)
    assert abs(eigs[0] - (n - 1)) <= 1e-7


def test_analytic_spectrum_size_checks():
    with pytest.raises(InputError):
        analytic_cycle_spectrum(2)
    with pytest.raises(InputError):
        analytic_wheel_spectrum(3)


# ---- assumption_report ----

def test_report_on_real_diagonal():
    report = assumption_report(DQMatrix.from_real(np.diag([3.0, 1.0, 1.0])))
    assert report.dominant == pytest.approx(3.0)
    assert report.gap_ratio == pytest.approx(1 / 3)
    assert report.alg_mult == report.geo_mult == 1
    assert report.assumption1 and report.assumption2i and report.assumption2ii and report.assumption2
    assert report.dual_conditions_checked is False


def test_report_on_balanced_cycle4():
    _, lap = cycle_laplacian(4, np.random.default_rng(7))
    report = assumption_report(lap)
    assert report.gap_ratio == pytest.approx(math.sqrt(2) / 2, abs=1e-8)
    assert report.assumption2i


def test_report_on_odd_cycle():
    _, lap = cycle_laplacian(3, np.random.default_rng(3))
    report = assumption_report(lap)
    assert report.alg_mult == 2
    assert report.geo_mult == 2
    assert report.assumption1
    assert not report.assumption2i
    assert not report.assumption2ii
    assert not report.assumption2


def test_report_on_jordan_matrix():
    report = assumption_report(jordan_experiment_matrix(10, 3, np.random.default_rng(1)))
    assert report.dominant == pytest.approx(1.1 + 1.1j, abs=1e-8)
    assert report.dominant_simple
    assert report.assumption2ii
    assert report.gap_ratio == pytest.approx(1 / 1.1, abs=1e-4)


def test_report_on_repeated_real_dominant():
    report = assumption_report(DQMatrix.from_real(np.diag([2.0, 2.0, 1.0])))
    assert report.alg_mult == 2 and report.geo_mult == 2
    assert report.assumption2i and not report.assumption2ii


def test_report_on_defective_dominant():
    report = assumption_report(DQMatrix.from_real([[2.0, 1.0], [0.0, 2.0]]))
    assert report.alg_mult == 2 and report.geo_mult == 1
    assert not report.assumption1 and not report.assumption2


def test_report_serializes_complex_values():
    report = assumption_report(DQMatrix.from_entries([[DualQuaternion(J)]]))
    data = report.model_dump()
    assert data["dominant"] == pytest.approx([0.0, 1.0])
    assert data["standard_eigs"][0] == pytest.approx([0.0, 1.0])


def test_report_rejects_zero_dominant():
    with pytest.raises(DegenerateSpectrumError):
        assumption_report(DQMatrix.zeros(3))


# ---- verify_eigenpair ----

def test_verify_exact_pair():
    a = DQMatrix.from_real([[2, 0], [0, 1]], [[1, 0], [0, 0]])
    verdict = verify_eigenpair(a, DQVector.from_real([1.0, 0.0]), DualQuaternion.real(2.0, 1.0), tol=1e-12)
    assert verdict.verified
    assert verdict.residual == 0.0


def test_verify_non_necessity_example():
    alpha = Quaternion(3.0)
    a, lam, v = non_necessity_example(alpha)
    assert verify_eigenpair(a, v, lam).verified

    printed = DQVector([[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]], [[2, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
    verdict = verify_eigenpair(a, printed, lam)
    assert not verdict.verified
    assert verdict.standard_residual == 0.0
    assert verdict.dual_residual == pytest.approx(2.0)


def test_verify_infinite_eigenvalue_example():
    alpha = Quaternion(0.0, 1.0)
    a, lam, v = infinite_eigenvalue_example(alpha)
    assert verify_eigenpair(a, v, lam).verified

    printed = DQVector([[0, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0]], [[0, 0, 0, 0], [1, 1, 0, 0], [0, 0, 0, 0]])
    assert not verify_eigenpair(a, printed, lam).verified


def test_verify_rejects_non_appreciable_vector():
    a = DQMatrix.identity(2)
    v = DQVector(np.zeros((2, 4)), [[1, 0, 0, 0], [0, 0, 0, 0]])
    assert not verify_eigenpair(a, v, DualQuaternion.real(1.0)).verified


def test_verify_converged_power_method_result(cfg):
    _, lap = wheel_laplacian(5, np.random.default_rng(2))
    result = power_method(lap, random_initial_vector(5, seed=2), cfg)
    assert result.converged
    assert verify_eigenpair(lap, result.eigenvector, result.eigenvalue).verified


@pytest.mark.parametrize(
    "builder, n, expect_2i",
    [
        (cycle_laplacian, 64, True),
        (cycle_laplacian, 33, False),
        (wheel_laplacian, 5, True),
        (wheel_laplacian, 64, True),
    ],
)
def test_report_verdicts_on_graph_laplacians(builder, n, expect_2i):
    _, lap = builder(n, np.random.default_rng(n))
    report = assumption_report(lap)
    assert report.assumption2i is expect_2i
    assert report.assumption2 is expect_2i
    if expect_2i:
        assert report.dominant.imag == pytest.approx(0.0, abs=1e-7)
        assert report.gap_ratio < 1.0
