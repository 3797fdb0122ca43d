"""
무작위 단위 이원 사원수와 무작위 가역 행렬 생성
"""
import logging
from typing import Tuple

import numpy as np

from dqeig.algebra.dual_quaternion import DualQuaternion
from dqeig.algebra.qarray import frobenius, qmatmul
from dqeig.errors import GenerationError, SingularMatrixError
from dqeig.linalg.inverse import dqm_inverse
from dqeig.linalg.matrix import DQMatrix

logger = logging.getLogger(__name__)

MAX_ATTEMPTS = 10
INVERSE_RESIDUAL_TOL = 1e-8
# ‖P_s‖_F ‖P_s⁻¹‖_F / n 상한 (이 값은 항상 1 이상)
CONDITION_LIMIT = 1e4


def rand_unit_dq(rng: np.random.Generator) -> DualQuaternion:
    """
    단위 이원 사원수 표본

    q_s는 단위 3-구면 위 균등, q_d는 가우스 벡터에서 q_s 방향 성분을 뺀 것이다.

    Args:
        rng: 난수 생성기

    Returns:
        |q̂| = 1 + 0ε 인 이원 사원수
    """
    g = rng.standard_normal(4)
    q_s = g / np.linalg.norm(g)
    h = rng.standard_normal(4)
    q_d = h - q_s * float(np.dot(q_s, h))
    return DualQuaternion.from_arrays(q_s, q_d)


def random_invertible(n: int, rng: np.random.Generator) -> Tuple[DQMatrix, DQMatrix]:
    """
    가우스 성분의 가역 이원 사원수 행렬과 그 역행렬

    표준부 역행렬 잔차가 크거나 조건수 추정치가 크면 다시 뽑는다.

    Args:
        n: 행렬 크기
        rng: 난수 생성기

    Returns:
        (P̂, P̂⁻¹)
    """
    identity = np.zeros((n, n, 4))
    identity[np.arange(n), np.arange(n), 0] = 1.0

    for attempt in range(1, MAX_ATTEMPTS + 1):
        p = DQMatrix(rng.standard_normal((n, n, 4)), rng.standard_normal((n, n, 4)))
        try:
            p_inv = dqm_inverse(p)
        except SingularMatrixError:
            logger.debug(f"무작위 행렬이 특이합니다 (시도 {attempt})")
            continue
        residual = frobenius(qmatmul(p.std, p_inv.std) - identity)
        condition = frobenius(p.std) * frobenius(p_inv.std) / n
        if residual <= INVERSE_RESIDUAL_TOL and condition <= CONDITION_LIMIT:
            return p, p_inv
        logger.debug(f"재표본 (시도 {attempt}): 역행렬 잔차 {residual:.2e}, 조건수 {condition:.2e}")

    logger.warning(f"{MAX_ATTEMPTS}번 시도 후에도 조건이 좋은 가역 행렬을 얻지 못했습니다 (n={n})")
    raise GenerationError(f"가역 행렬 생성 실패: n={n}, 시도 {MAX_ATTEMPTS}회")
