"""
가정 판정 보고서와 고유쌍 검증
"""
import logging
import math
from typing import Optional

import numpy as np

from dqeig.algebra.dual_quaternion import DualQuaternion
from dqeig.algebra.qarray import frobenius
from dqeig.config import APPRECIABLE_TOL, get_settings
from dqeig.errors import DegenerateSpectrumError
from dqeig.linalg.matrix import DQMatrix, DQVector, dqm_mul, dqm_normFR
from dqeig.models.schemas import EigenpairVerdict, SpectrumReport
from dqeig.oracle.spectrum import complex_adjoint_std, standard_eigs

logger = logging.getLogger(__name__)


def geometric_multiplicity(m: np.ndarray, lam: complex, is_real: bool, rank_tol: float) -> int:
    """
    (M - λI)의 수치적 영공간 차원으로 사원수 기하적 중복도 추정

    복소 λ는 영공간 차원 그대로, 실수 λ는 절반으로 센다.
    """
    scale = max(1.0, float(np.linalg.norm(m, 2)))
    singular = np.linalg.svd(m - lam * np.eye(m.shape[0]), compute_uv=False)
    nullity = int(np.count_nonzero(singular <= rank_tol * scale))
    return nullity // 2 if is_real else nullity


def assumption_report(
    a: DQMatrix,
    cluster_tol: Optional[float] = None,
    rank_tol: Optional[float] = None,
    pair_tol: Optional[float] = None,
    method: str = "qr",
) -> SpectrumReport:
    """
    지배 표준 고윳값의 간격비, 중복도, 가정 판정

    Args:
        a: 정사각 이원 사원수 행렬
        cluster_tol: 군집 상대 허용오차
        rank_tol: 수치적 계수 허용오차
        pair_tol: 켤레 짝 허용오차
        method: complex_eigs 방법

    Returns:
        SpectrumReport
    """
    settings = get_settings()
    cluster_tol = settings.cluster_tol if cluster_tol is None else cluster_tol
    rank_tol = settings.rank_tol if rank_tol is None else rank_tol

    eigs = standard_eigs(a, pair_tol=pair_tol, method=method)
    m = complex_adjoint_std(a)
    scale = max(1.0, float(np.linalg.norm(m)))

    lead = eigs[0]
    if abs(lead) <= APPRECIABLE_TOL * scale:
        raise DegenerateSpectrumError(f"지배 표준 고윳값이 0입니다: |λ₁ₛ| = {abs(lead):.3e}")

    radius = cluster_tol * max(1.0, abs(lead))
    in_cluster = np.abs(eigs - lead) <= radius
    cluster = eigs[in_cluster]
    others = eigs[~in_cluster]
    dominant = complex(np.mean(cluster))

    alg_mult = int(cluster.size)
    gap_ratio = float(np.max(np.abs(others)) / abs(dominant)) if others.size else 0.0
    gap_ratio = min(gap_ratio, 1.0)

    is_real = abs(dominant.imag) <= radius
    if is_real:
        dominant = complex(dominant.real, 0.0)
    geo_mult = geometric_multiplicity(m, dominant, is_real, rank_tol)

    assumption1 = gap_ratio < 1.0 and alg_mult == geo_mult
    assumption2i = assumption1 and is_real
    assumption2ii = alg_mult == geo_mult == 1

    logger.info(
        f"스펙트럼 보고: λ₁ₛ={dominant:.6g}, 간격비 {gap_ratio:.4f}, "
        f"중복도 {alg_mult}/{geo_mult}, 2(i)={assumption2i}, 2(ii)={assumption2ii}"
    )
    return SpectrumReport(
        standard_eigs=[complex(z) for z in eigs],
        dominant=dominant,
        gap_ratio=gap_ratio,
        dominant_simple=alg_mult == 1,
        alg_mult=alg_mult,
        geo_mult=geo_mult,
        assumption1=assumption1,
        assumption2i=assumption2i,
        assumption2ii=assumption2ii,
        assumption2=assumption2i or assumption2ii,
    )


def verify_eigenpair(a: DQMatrix, v: DQVector, lam: DualQuaternion, tol: float = 1e-8) -> EigenpairVerdict:
    """
    Âv̂ = v̂λ̂ 검증

    상대 잔차 ‖Âv̂ - v̂λ̂‖_{2^R} / ‖Â‖_{F^R} 가 tol 이하이면 참이다.
    표준부 식과 이원부 식의 잔차도 따로 보고한다.

    Args:
        a: 행렬
        v: 고유벡터 후보
        lam: 고윳값 후보
        tol: 상대 허용오차

    Returns:
        EigenpairVerdict
    """
    r = dqm_mul(a, v) - v.right_mul(lam)
    standard_residual = frobenius(r.std)
    dual_residual = frobenius(r.dual)
    residual = math.hypot(standard_residual, dual_residual)
    norm = dqm_normFR(a)
    relative = residual / norm if norm > 0.0 else residual

    verified = relative <= tol
    if v.std_norm() <= APPRECIABLE_TOL:
        logger.warning("고유벡터 후보의 표준부가 0입니다")
        verified = False

    return EigenpairVerdict(
        verified=verified,
        residual=residual,
        relative_residual=relative,
        standard_residual=standard_residual,
        dual_residual=dual_residual,
        tol=tol,
    )
