"""
잔차 기록에서 반복당 수렴률 추정
"""
import logging
from typing import Sequence

import numpy as np

from dqeig.errors import UndefinedRateError

logger = logging.getLogger(__name__)

RATE_WINDOW_LOW = 1e-14
RATE_WINDOW_HIGH = 1e-2
MIN_RATE_POINTS = 10
# 앞부분 제외 비율
WARMUP_FRACTION = 0.1
# 수렴 시 바닥값 근처(최종 잔차의 이 배수 이하) 제외
FLOOR_FACTOR = 10.0


def estimate_rate(trace: Sequence[float], converged: bool = True) -> float:
    """
    log10(잔차)의 최소제곱 기울기로 반복당 감소 비율을 추정

    (1e-14, 1e-2) 범위의 점만 쓰고, 앞 10% 반복과 (수렴한 경우) 최종 잔차의
    10배 이하인 바닥 구간은 제외한다.

    Args:
        trace: 반복별 잔차
        converged: 기록이 수렴으로 끝났는지 여부

    Returns:
        10^기울기

    Raises:
        UndefinedRateError: 조건을 만족하는 점이 10개 미만일 때
    """
    res = np.asarray(trace, dtype=np.float64)
    iters = np.arange(1, res.size + 1, dtype=np.float64)

    mask = (res > RATE_WINDOW_LOW) & (res < RATE_WINDOW_HIGH)
    mask &= iters > WARMUP_FRACTION * res.size
    if converged and res.size:
        mask &= res > FLOOR_FACTOR * res[-1]

    points = int(np.count_nonzero(mask))
    if points < MIN_RATE_POINTS:
        raise UndefinedRateError(f"수렴률 추정에 쓸 점이 부족합니다: {points}개 (최소 {MIN_RATE_POINTS})")

    slope, _ = np.polyfit(iters[mask], np.log10(res[mask]), 1)
    rate = float(10.0 ** slope)
    logger.debug(f"수렴률 추정: {rate:.4f} ({points}개 점)")
    return rate
