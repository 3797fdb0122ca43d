"""
사원수 배열 연산 (마지막 축 길이 4: w, x, y, z)

행렬 곱은 q = (w + x i) + (y + z i) j 분해를 이용해 복소 행렬 곱 4번으로 계산한다.
"""
import math
from typing import Tuple

import numpy as np

# 누적 합에서 보정 합산을 쓰기 시작하는 원소 수
COMPENSATED_SUM_THRESHOLD = 64


def as_qarray(values, ndim: int) -> np.ndarray:
    """
    입력을 (..., 4) float64 배열로 변환

    Args:
        values: 사원수 성분 배열
        ndim: 사원수 축을 제외한 기대 차원 수

    Returns:
        float64 배열
    """
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != ndim + 1 or arr.shape[-1] != 4:
        raise ValueError(f"사원수 배열 모양이 잘못되었습니다: {arr.shape}")
    return arr


def qmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """원소별 해밀턴 곱 (브로드캐스팅 지원)"""
    a0, a1, a2, a3 = a[..., 0], a[..., 1], a[..., 2], a[..., 3]
    b0, b1, b2, b3 = b[..., 0], b[..., 1], b[..., 2], b[..., 3]
    return np.stack(
        [
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        ],
        axis=-1,
    )


def qconj(a: np.ndarray) -> np.ndarray:
    """원소별 켤레"""
    out = -a
    out[..., 0] = a[..., 0]
    return out


def qabs(a: np.ndarray) -> np.ndarray:
    """원소별 크기"""
    return np.sqrt(np.sum(a * a, axis=-1))


def to_complex_pair(a: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """q = c1 + c2 j 분해 (c1 = w + x i, c2 = y + z i)"""
    return a[..., 0] + 1j * a[..., 1], a[..., 2] + 1j * a[..., 3]


def from_complex_pair(c1: np.ndarray, c2: np.ndarray) -> np.ndarray:
    """c1 + c2 j를 사원수 배열로 합성"""
    return np.stack([c1.real, c1.imag, c2.real, c2.imag], axis=-1)


def complex_pair_matmul(a1, a2, b1, b2) -> Tuple[np.ndarray, np.ndarray]:
    """(A1 + A2 j)(B1 + B2 j) = (A1 B1 - A2 conj(B2)) + (A1 B2 + A2 conj(B1)) j"""
    return a1 @ b1 - a2 @ np.conj(b2), a1 @ b2 + a2 @ np.conj(b1)


def qmatmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """
    사원수 행렬 곱

    Args:
        a: (m, k, 4) 배열
        b: (k, n, 4) 또는 (k, 4) 배열

    Returns:
        (m, n, 4) 또는 (m, 4) 배열
    """
    a1, a2 = to_complex_pair(a)
    b1, b2 = to_complex_pair(b)
    c1, c2 = complex_pair_matmul(a1, a2, b1, b2)
    return from_complex_pair(c1, c2)


def real_sum(values: np.ndarray) -> float:
    """실수 합 (원소가 많으면 보정 합산)"""
    flat = np.ravel(values)
    if flat.size > COMPENSATED_SUM_THRESHOLD:
        return math.fsum(flat.tolist())
    return float(np.sum(flat))


def frobenius(a: np.ndarray) -> float:
    """사원수 배열 전체의 2-노름 (프로베니우스)"""
    return math.sqrt(real_sum(a * a))


def inner_real(a: np.ndarray, b: np.ndarray) -> float:
    """Σ scalar(conj(a_i) b_i) = 성분별 내적의 합"""
    return real_sum(a * b)
