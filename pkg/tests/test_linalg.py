"""
이원 사원수 벡터 / 행렬 연산과 역행렬 테스트
"""
import math

import numpy as np
import pytest

from dqeig.algebra.dual import DualNumber
from dqeig.algebra.dual_quaternion import DualQuaternion
from dqeig.algebra.quaternion import I, J, ONE, Quaternion
from dqeig.errors import BreakdownError, DimensionError, SingularMatrixError
from dqeig.linalg import (
    DQMatrix,
    DQVector,
    dqm_inverse,
    dqm_mul,
    dqm_normF,
    dqm_normFR,
    dqv_norm2,
    dqv_norm2R,
    dqv_normalize,
    qmat_inverse,
    residual_2R,
)

from tests.helpers import random_dq, random_matrix, random_vector


# ---- 곱과 켤레 전치 ----

def test_identity_times_vector(rng):
    v = random_vector(rng, 5)
    assert dqm_mul(DQMatrix.identity(5), v).allclose(v)


def test_block_rule_on_real_vector(rng):
    d = random_matrix(rng, 3).std
    a = DQMatrix(DQMatrix.identity(3).std, d)
    x = DQVector(rng.standard_normal((3, 4)))
    y = a @ x
    assert np.allclose(y.std, x.std)
    assert np.allclose(y.dual, dqm_mul(DQMatrix(d), x).std)


def test_matvec_example():
    a = DQMatrix.from_real([[2, 1], [0, 2]], [[1, 0], [0, 0]])
    y = a @ DQVector.from_real([1.0, 0.0])
    assert y.allclose(DQVector.from_real([2.0, 0.0], [1.0, 0.0]))


def test_matmul_dimension_mismatch(rng):
    with pytest.raises(DimensionError):
        dqm_mul(random_matrix(rng, 2, 3), random_vector(rng, 2))


def test_matmul_associative(rng):
    a, b, c = random_matrix(rng, 4, 3), random_matrix(rng, 3, 5), random_matrix(rng, 5, 2)
    assert ((a @ b) @ c).allclose(a @ (b @ c), atol=1e-10)


def test_conj_transpose_examples(rng):
    assert DQMatrix.identity(3).H.allclose(DQMatrix.identity(3))
    single = DQMatrix.from_entries([[DualQuaternion(I)]])
    assert single.H.allclose(DQMatrix.from_entries([[DualQuaternion(-I)]]))


def test_conj_transpose_reverses_products(rng):
    a, b = random_matrix(rng, 3, 4), random_matrix(rng, 4, 2)
    assert (a @ b).H.allclose(b.H @ a.H, atol=1e-11)
    assert a.H.H.allclose(a)


def test_matvec_agrees_with_entrywise_sum(rng):
    a, v = random_matrix(rng, 3), random_vector(rng, 3)
    y = a @ v
    for i in range(3):
        expected = DualQuaternion()
        for j in range(3):
            expected = expected + a[i, j] * v[j]
        assert y[i].distance(expected) <= 1e-12


def test_right_mul_is_not_left_mul(rng):
    v = DQVector.from_entries([DualQuaternion(I)])
    assert v.right_mul(DualQuaternion(J))[0] == DualQuaternion(Quaternion(0, 0, 0, 1))


# ---- 노름 ----

def test_norm2_examples():
    assert dqv_norm2(DQVector.from_real([1.0, 0.0])) == DualNumber(1.0, 0.0)
    norm = dqv_norm2(DQVector.from_real([1.0, 1.0, 1.0], [2.0, 2.0, 1.0]))
    assert norm.isclose(DualNumber(math.sqrt(3), 5 / math.sqrt(3)))
    assert dqv_norm2(DQVector.from_real([0.0, 0.0], [3.0, 4.0])) == DualNumber(0.0, 5.0)


def test_norm2R_examples():
    assert dqv_norm2R(DQVector.from_real([1.0, 0.0])) == 1.0
    assert math.isclose(dqv_norm2R(DQVector.from_real([1.0], [1.0])), math.sqrt(2))
    assert math.isclose(dqv_norm2R(DQVector.from_real([3.0, 0.0], [0.0, 4.0])), 5.0)


def test_normF_examples(rng):
    assert dqm_normF(DQMatrix.identity(2)).isclose(DualNumber(math.sqrt(2), 0.0))
    d = rng.standard_normal((2, 2, 4))
    zero_std = DQMatrix(np.zeros((2, 2, 4)), d)
    assert dqm_normF(zero_std).isclose(DualNumber(0.0, float(np.linalg.norm(d))))
    both = DQMatrix.from_real(np.eye(2), np.eye(2))
    assert dqm_normF(both).isclose(DualNumber(math.sqrt(2), math.sqrt(2)))
    assert math.isclose(dqm_normFR(both), 2.0)


def test_norm_of_right_unit_multiple_is_unchanged(rng):
    from dqeig.graphgen.sampling import rand_unit_dq

    v = random_vector(rng, 4)
    rotated = v.right_mul(rand_unit_dq(rng))
    assert dqv_norm2(rotated).isclose(dqv_norm2(v), atol=1e-10)


# ---- 정규화 ----

def test_normalize_examples():
    v = dqv_normalize(DQVector.from_real([2.0, 0.0]))
    assert v.allclose(DQVector.from_real([1.0, 0.0]))

    v = dqv_normalize(DQVector.from_real([1.0, 1.0, 1.0], [2.0, 2.0, 1.0]))
    root3 = math.sqrt(3)
    expected = DQVector.from_real(
        [1 / root3, 1 / root3, 1 / root3],
        [1 / (3 * root3), 1 / (3 * root3), -2 / (3 * root3)],
    )
    assert v.allclose(expected)


def test_normalize_gives_unit_norm(rng):
    for _ in range(50):
        v = dqv_normalize(random_vector(rng, 6))
        assert dqv_norm2(v).isclose(DualNumber(1.0, 0.0), atol=1e-12)


def test_normalize_non_appreciable_raises(rng):
    with pytest.raises(BreakdownError):
        dqv_normalize(DQVector(np.zeros((3, 4)), rng.standard_normal((3, 4))))


# ---- 역행렬 ----

def test_inverse_examples(rng):
    assert dqm_inverse(DQMatrix.identity(4)).allclose(DQMatrix.identity(4))
    d = DQMatrix.diag([DualQuaternion(I), DualQuaternion(J)])
    assert dqm_inverse(d).allclose(DQMatrix.diag([DualQuaternion(-I), DualQuaternion(-J)]))
    dual = rng.standard_normal((3, 3, 4))
    a = DQMatrix(DQMatrix.identity(3).std, dual)
    assert dqm_inverse(a).allclose(DQMatrix(DQMatrix.identity(3).std, -dual), atol=1e-14)


@pytest.mark.parametrize("n", [1, 2, 5, 12])
def test_inverse_round_trip(rng, n):
    a = random_matrix(rng, n)
    inv = dqm_inverse(a)
    identity = DQMatrix.identity(n)
    assert (a @ inv).allclose(identity, atol=1e-8)
    assert (inv @ a).allclose(identity, atol=1e-8)


def test_inverse_needs_pivoting():
    m = np.zeros((2, 2, 4))
    m[0, 1] = ONE.to_array()
    m[1, 0] = J.to_array()
    inv = qmat_inverse(m)
    a = DQMatrix(m)
    assert (a @ DQMatrix(inv)).allclose(DQMatrix.identity(2))


def test_inverse_singular():
    m = np.zeros((2, 2, 4))
    m[0, 0, 0] = m[0, 1, 0] = m[1, 0, 0] = m[1, 1, 0] = 1.0
    with pytest.raises(SingularMatrixError):
        qmat_inverse(m)


def test_inverse_non_square(rng):
    with pytest.raises(DimensionError):
        dqm_inverse(random_matrix(rng, 2, 3))


# ---- 잔차 ----

def test_residual_examples():
    a = DQMatrix.from_real([[2, 0], [0, 1]], [[1, 0], [0, 0]])
    v = DQVector.from_real([1.0, 0.0])
    assert residual_2R(a, v, DualQuaternion.real(2.0, 1.0)) == 0.0
    assert residual_2R(DQMatrix.identity(2), v, DualQuaternion()) == 1.0


def test_residual_of_fail_v_iterate():
    a = DQMatrix.diag([DualQuaternion(ONE, I), DualQuaternion(ONE, I)])
    v = DQVector.from_entries([DualQuaternion(ONE, I), DualQuaternion(J, I * J)]).scale(1 / math.sqrt(2))
    assert math.isclose(residual_2R(a, v, DualQuaternion.real(1.0)), 1.0, rel_tol=1e-12)


def test_residual_is_zero_for_constructed_eigenpair(rng):
    q = random_dq(rng)
    a = DQMatrix.diag([q, DualQuaternion.real(0.1)])
    v = DQVector.from_entries([DualQuaternion.real(1.0), DualQuaternion()])
    assert residual_2R(a, v, q) <= 1e-15


# ---- 불변성과 블록 대각 ----

def test_matrix_does_not_alias_caller_arrays(rng):
    std = rng.standard_normal((3, 3, 4))
    a = DQMatrix(std)
    v = random_vector(rng, 3)
    before = dqm_mul(a, v)

    std[0, 0, 0] += 100.0
    assert dqm_mul(a, v).allclose(before)

    with pytest.raises(ValueError):
        a.std[0, 0, 0] = 1.0
    with pytest.raises(ValueError):
        a.dual[1, 2, 3] = 1.0


def test_block_diag_places_blocks(rng):
    b1 = random_matrix(rng, 2)
    b2 = random_matrix(rng, 1)
    out = DQMatrix.block_diag([b1, b2])

    assert out.shape == (3, 3)
    assert np.array_equal(out.std[:2, :2], b1.std) and np.array_equal(out.dual[:2, :2], b1.dual)
    assert np.array_equal(out.std[2:, 2:], b2.std) and np.array_equal(out.dual[2:, 2:], b2.dual)
    assert not out.std[:2, 2:].any() and not out.dual[2:, :2].any()
