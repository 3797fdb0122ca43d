"""
사원수 / 이원 사원수 행렬 역행렬
"""
import logging

import numpy as np

from dqeig.algebra.qarray import as_qarray, frobenius, qabs, qconj, qmatmul, qmul
from dqeig.errors import DimensionError, SingularMatrixError
from dqeig.linalg.matrix import DQMatrix

logger = logging.getLogger(__name__)

# 피벗 크기 하한 (‖M‖_F 대비)
PIVOT_RELATIVE_TOL = 1e-12


def qmat_inverse(m: np.ndarray) -> np.ndarray:
    """
    사원수 행렬의 가우스-조르단 역행렬

    행 연산은 모두 왼쪽 곱으로 적용하고, 크기가 가장 큰 원소를 피벗으로 고른다
    (동률이면 가장 작은 행 번호).

    Args:
        m: (n, n, 4) 사원수 행렬

    Returns:
        (n, n, 4) 역행렬
    """
    m = as_qarray(m, 2)
    n = m.shape[0]
    if m.shape[1] != n:
        raise DimensionError(f"정사각 행렬이 아닙니다: {m.shape[:2]}")

    scale = frobenius(m)
    threshold = PIVOT_RELATIVE_TOL * scale
    work = m.copy()
    inv = np.zeros_like(work)
    inv[np.arange(n), np.arange(n), 0] = 1.0

    for col in range(n):
        magnitudes = qabs(work[col:, col])
        pivot_row = col + int(np.argmax(magnitudes))
        pivot_mag = float(magnitudes[pivot_row - col])
        if scale == 0.0 or pivot_mag < threshold:
            raise SingularMatrixError(f"피벗이 너무 작습니다 (열 {col}): {pivot_mag:.3e}")
        if pivot_row != col:
            work[[col, pivot_row]] = work[[pivot_row, col]]
            inv[[col, pivot_row]] = inv[[pivot_row, col]]

        pivot = work[col, col]
        pivot_inv = qconj(pivot) / float(np.dot(pivot, pivot))
        work[col] = qmul(pivot_inv, work[col])
        inv[col] = qmul(pivot_inv, inv[col])

        # 나머지 모든 행에서 한꺼번에 소거: row_i ← row_i - M_ic row_c
        factors = work[:, col].copy()
        factors[col] = 0.0
        work -= qmul(factors[:, None, :], work[col][None, :, :])
        inv -= qmul(factors[:, None, :], inv[col][None, :, :])

    return inv


def dqm_inverse(a: DQMatrix) -> DQMatrix:
    """
    이원 사원수 행렬 역행렬

    표준부 A_s⁻¹, 이원부 -A_s⁻¹ A_d A_s⁻¹

    Args:
        a: 표준부가 가역인 정사각 행렬

    Returns:
        역행렬
    """
    if not a.is_square():
        raise DimensionError(f"정사각 행렬이 아닙니다: {a.shape}")
    s_inv = qmat_inverse(a.std)
    d_inv = -qmatmul(qmatmul(s_inv, a.dual), s_inv)
    logger.debug(f"역행렬 계산 완료: {a.n_rows}x{a.n_cols}")
    return DQMatrix(s_inv, d_inv)
