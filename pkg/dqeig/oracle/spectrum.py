"""
표준 고윳값 계산과 해석적 스펙트럼
"""
import logging
from typing import Iterable, Optional

import numpy as np

from dqeig.config import get_settings
from dqeig.dcam.adjoint import adjoint_block
from dqeig.errors import InconsistentSpectrumError, InputError
from dqeig.linalg.matrix import DQMatrix
from dqeig.oracle.qr import complex_eigs

logger = logging.getLogger(__name__)


def complex_adjoint_std(a: DQMatrix) -> np.ndarray:
    """표준부의 2n x 2n 복소 수반 [[A₁, A₂], [-conj(A₂), conj(A₁)]]"""
    return adjoint_block(a.std)


def sort_spectrum(values: Iterable[complex]) -> np.ndarray:
    """크기 내림차순, 같으면 실수부 내림차순"""
    values = np.asarray(list(values), dtype=np.complex128)
    order = np.lexsort((-values.real, -np.abs(values)))
    return values[order]


def standard_form(values: Iterable[complex]) -> np.ndarray:
    """허수부를 음이 아니게 바꾼 뒤 정렬 (사원수 유사류 대표)"""
    values = np.asarray(list(values), dtype=np.complex128)
    return sort_spectrum(values.real + 1j * np.abs(values.imag))


def standard_eigs(
    a: DQMatrix,
    pair_tol: Optional[float] = None,
    method: str = "qr",
) -> np.ndarray:
    """
    표준부의 표준 고윳값 (허수부 ≥ 0, 사원수 대수적 중복도만큼 반복)

    수반 행렬 고윳값 중 허수부가 양수인 것은 그대로, 실수인 것은 두 개씩 묶어 하나로 센다.
    켤레 짝은 개수와 합으로 확인한다 (결함 있는 군집은 원소 단위로 짝지을 수 없다).

    Args:
        a: 정사각 이원 사원수 행렬
        pair_tol: 켤레 짝 허용오차 (None이면 설정값)
        method: complex_eigs 방법

    Returns:
        정렬된 표준 고윳값 (길이 n)
    """
    if not a.is_square():
        raise InputError(f"정사각 행렬이 아닙니다: {a.shape}")
    pair_tol = get_settings().pair_tol if pair_tol is None else pair_tol

    m = complex_adjoint_std(a)
    scale = max(1.0, float(np.linalg.norm(m)))
    eigs = complex_eigs(m, method=method)
    tau = pair_tol * scale

    pos = eigs[eigs.imag > tau]
    neg = eigs[eigs.imag < -tau]
    real = np.sort(eigs[np.abs(eigs.imag) <= tau].real)

    if len(pos) != len(neg) or len(real) % 2 != 0:
        raise InconsistentSpectrumError(
            f"수반 스펙트럼의 켤레 짝이 맞지 않습니다: 양 {len(pos)}, 음 {len(neg)}, 실수 {len(real)}"
        )
    mismatch = abs(np.sum(pos) - np.sum(np.conj(neg)))
    if mismatch > tau:
        raise InconsistentSpectrumError(f"켤레 합이 일치하지 않습니다: {mismatch:.3e} > {tau:.3e}")

    halved = (real[0::2] + real[1::2]) / 2.0
    result = sort_spectrum(np.concatenate([pos, halved.astype(np.complex128)]))
    logger.debug(f"표준 고윳값 {len(result)}개 (복소 {len(pos)}, 실수 {len(halved)})")
    return result


def analytic_cycle_spectrum(n: int) -> np.ndarray:
    """방향 순환 그래프 라플라시안 고윳값 {1 - e^{2πik/n}}"""
    if n < 3:
        raise InputError(f"순환 그래프는 n ≥ 3 이어야 합니다: {n}")
    k = np.arange(n)
    return 1.0 - np.exp(2j * np.pi * k / n)


def analytic_wheel_spectrum(n: int) -> np.ndarray:
    """바퀴 그래프: 순환(n-1) 스펙트럼 ∪ {n-1}"""
    if n < 4:
        raise InputError(f"바퀴 그래프는 n ≥ 4 이어야 합니다: {n}")
    return np.concatenate([analytic_cycle_spectrum(n - 1), [complex(n - 1)]])
