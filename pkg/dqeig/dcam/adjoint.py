"""
이원 복소 수반 행렬(DCAM) 사상과 벡터 사상 ℱ
"""
import numpy as np

from dqeig.algebra.qarray import from_complex_pair, to_complex_pair
from dqeig.dcam.matrix import DCMatrix, DCVector
from dqeig.errors import DimensionError
from dqeig.linalg.matrix import DQMatrix, DQVector


def adjoint_block(a: np.ndarray) -> np.ndarray:
    """
    사원수 행렬 한 부분의 복소 수반 [[A₁, A₂], [-conj(A₂), conj(A₁)]]

    Args:
        a: (m, n, 4) 사원수 배열

    Returns:
        (2m, 2n) 복소 배열
    """
    a1, a2 = to_complex_pair(a)
    return np.block([[a1, a2], [-np.conj(a2), np.conj(a1)]])


def dcam_map(q: DQMatrix) -> DCMatrix:
    """표준부와 이원부에 각각 복소 수반을 적용"""
    return DCMatrix(adjoint_block(q.std), adjoint_block(q.dual))


def _stack(a: np.ndarray) -> np.ndarray:
    v1, v2 = to_complex_pair(a)
    return np.concatenate([v1, -np.conj(v2)])


def _unstack(u: np.ndarray) -> np.ndarray:
    n = u.shape[0] // 2
    return from_complex_pair(u[:n], -np.conj(u[n:]))


def f_map(v: DQVector) -> DCVector:
    """v = v₁ + v₂ j 를 (v₁; -conj(v₂)) 로 보낸다"""
    return DCVector(_stack(v.std), _stack(v.dual))


def f_inv(u: DCVector) -> DQVector:
    """(u₁; u₂) 를 u₁ - conj(u₂) j 로 되돌린다"""
    if len(u) % 2 != 0:
        raise DimensionError(f"ℱ⁻¹ 입력 길이는 짝수여야 합니다: {len(u)}")
    return DQVector(_unstack(u.std), _unstack(u.dual))
