"""
지정 스펙트럼 행렬과 조르당 블록 실험 행렬
"""
import logging
from typing import List, Sequence, Tuple

import numpy as np

from dqeig.algebra.dual import DualComplex
from dqeig.algebra.dual_quaternion import DualQuaternion
from dqeig.errors import InputError
from dqeig.graphgen.sampling import random_invertible
from dqeig.linalg.matrix import DQMatrix, dqm_mul

logger = logging.getLogger(__name__)


def leading_spectrum(n: int, leading: DualComplex, rest: DualComplex) -> List[DualComplex]:
    """{leading, rest, …, rest} (길이 n)"""
    if n < 1:
        raise InputError(f"n ≥ 1 이어야 합니다: {n}")
    return [leading] + [rest] * (n - 1)


def prescribed_spectrum_matrix(
    eigs: Sequence[DualComplex],
    rng: np.random.Generator,
) -> Tuple[DQMatrix, DQMatrix]:
    """
    Â = P̂ diag(eigs) P̂⁻¹

    P̂의 i번째 열이 eigs[i]의 고유벡터가 된다.

    Args:
        eigs: 이원 복소수 고윳값 목록
        rng: 난수 생성기

    Returns:
        (Â, P̂)
    """
    if len(eigs) == 0:
        raise InputError("고윳값 목록이 비어 있습니다")
    n = len(eigs)
    p, p_inv = random_invertible(n, rng)
    diag = DQMatrix.diag([DualQuaternion.from_dual_complex(e) for e in eigs])
    a = dqm_mul(dqm_mul(p, diag), p_inv)
    logger.debug(f"지정 스펙트럼 행렬 생성: n={n}")
    return a, p


def jordan_block(n: int, value: complex) -> np.ndarray:
    """대각 value, 위 대각 1인 복소 조르당 블록"""
    block = np.diag(np.full(n, value, dtype=np.complex128))
    block[np.arange(n - 1), np.arange(1, n)] = 1.0
    return block


def _complex_block(c: np.ndarray) -> DQMatrix:
    """복소 행렬을 표준부(1, i 성분)로, 단위 행렬을 이원부로 갖는 블록"""
    k = c.shape[0]
    std = np.zeros((k, k, 4))
    std[..., 0] = c.real
    std[..., 1] = c.imag
    dual = np.zeros((k, k, 4))
    dual[np.arange(k), np.arange(k), 0] = 1.0
    return DQMatrix(std, dual)


def jordan_experiment_matrix(n: int, n21: int, rng: np.random.Generator) -> DQMatrix:
    """
    표준부가 대각화되지 않는 실험 행렬 Â = P̂⁻¹ B̂ P̂

    B_s = diag(1.1+1.1i, J_{n21}(1+i), (1+i) I_{n-1-n21}), B_d = I

    Args:
        n: 행렬 크기
        n21: 조르당 블록 크기 (1 ≤ n21 ≤ n-1)
        rng: 난수 생성기

    Returns:
        Â
    """
    if not 1 <= n21 <= n - 1:
        raise InputError(f"조르당 블록 크기는 1..{n - 1} 범위여야 합니다: {n21}")

    blocks = [_complex_block(np.array([[1.1 + 1.1j]])), _complex_block(jordan_block(n21, 1 + 1j))]
    tail = n - 1 - n21
    if tail:
        blocks.append(_complex_block(np.diag(np.full(tail, 1 + 1j))))
    b = DQMatrix.block_diag(blocks)

    p, p_inv = random_invertible(n, rng)
    logger.debug(f"조르당 실험 행렬 생성: n={n}, n21={n21}")
    return dqm_mul(dqm_mul(p_inv, b), p)
