"""
거듭제곱법 (PM)과 이원 복소 수반 행렬 기반 거듭제곱법 (DCAM-PM)
"""
import logging
import time
from typing import Callable, List, Optional, Tuple, Union

import numpy as np

from dqeig.algebra.dual import DualComplex
from dqeig.algebra.dual_quaternion import DualQuaternion
from dqeig.config import APPRECIABLE_TOL
from dqeig.dcam.adjoint import dcam_map, f_inv, f_map
from dqeig.dcam.matrix import DCVector, dc_matvec
from dqeig.errors import BreakdownError, DimensionError
from dqeig.linalg.matrix import DQMatrix, DQVector, dqm_mul, residual_2R
from dqeig.models.schemas import Algorithm, EigResult, SolverConfig, Status

logger = logging.getLogger(__name__)

# ‖v0‖₂ 가 1 + 0ε 로 간주되는 허용오차
UNIT_NORM_TOL = 1e-14
# 사후 검증에서 루프 안 잔차와의 반올림 차이 여유
VERIFY_SLACK = 1.01

Vector = Union[DQVector, DCVector]


def random_initial_vector(n: int, seed: Optional[int] = None) -> DQVector:
    """
    표준부는 가우스 난수, 이원부는 0인 정규화된 초기 벡터

    Args:
        n: 길이
        seed: 난수 시드

    Returns:
        초기 벡터
    """
    rng = np.random.default_rng(seed)
    return DQVector(rng.standard_normal((n, 4))).normalize()


def _prepare(v0: Vector) -> Vector:
    if v0.std_norm() <= APPRECIABLE_TOL:
        raise BreakdownError("초기 벡터의 표준부가 0이어서 반복을 시작할 수 없습니다")
    norm = v0.norm2()
    if abs(norm.s - 1.0) <= UNIT_NORM_TOL and abs(norm.d) <= UNIT_NORM_TOL:
        return v0
    return v0.normalize()


def _iterate(
    matvec: Callable[[Vector], Vector],
    v0: Vector,
    cfg: SolverConfig,
) -> Tuple[Vector, Union[DualQuaternion, DualComplex], Status, List[float], list]:
    """
    공통 반복 루프

    y = Âv, λ = v*y, ‖y - vλ‖_{2^R} ≤ δ 이면 종료, 아니면 v ← y/‖y‖₂.
    반환하는 (v, λ)는 항상 같은 반복에서 판정에 쓰인 쌍이다.
    """
    v = _prepare(v0)
    trace: List[float] = []
    lambdas: list = []
    lam = None

    for k in range(1, cfg.k_max + 1):
        y = matvec(v)
        lam = v.conj_dot(y)
        res = (y - v.right_mul(lam)).norm2R()
        trace.append(res)
        lambdas.append(lam)
        logger.debug(f"반복 {k}: 잔차 {res:.3e}")

        if res <= cfg.delta:
            return v, lam, Status.CONVERGED, trace, lambdas

        y_norm = y.std_norm()
        if y_norm < cfg.breakdown_tol:
            logger.warning(f"반복 {k}에서 표준부가 사라졌습니다: ‖y_s‖ = {y_norm:.3e}")
            return v, lam, Status.BREAKDOWN, trace, lambdas
        if k == cfg.k_max:
            break
        try:
            v = y.normalize(tol=cfg.breakdown_tol)
        except BreakdownError:
            logger.warning(f"반복 {k}에서 정규화에 실패했습니다", exc_info=True)
            return v, lam, Status.BREAKDOWN, trace, lambdas

    return v, lam, Status.MAX_ITER, trace, lambdas


def _check_square(a: DQMatrix, v0: DQVector):
    if not a.is_square():
        raise DimensionError(f"정사각 행렬이 아닙니다: {a.shape}")
    if len(v0) != a.n_rows:
        raise DimensionError(f"초기 벡터 길이({len(v0)})가 행렬 크기({a.n_rows})와 다릅니다")


def _finish(
    algorithm: Algorithm,
    a: DQMatrix,
    v: DQVector,
    lam: DualQuaternion,
    status: Status,
    trace: List[float],
    lambda_trace: List[DualQuaternion],
    cfg: SolverConfig,
    started: float,
) -> EigResult:
    residual = residual_2R(a, v, lam)
    verified = status == Status.CONVERGED and residual <= cfg.delta * VERIFY_SLACK
    if status == Status.CONVERGED and not verified:
        logger.warning(f"사후 잔차 검증 실패: {residual:.3e} > δ = {cfg.delta:.1e}")
    wall_time = time.perf_counter() - started

    log = logger.info if status == Status.CONVERGED else logger.warning
    log(f"{algorithm.value} 종료: 상태 {status.value}, 반복 {len(trace)}, 잔차 {residual:.3e}, 시간 {wall_time:.3f}s")

    return EigResult(
        algorithm=algorithm,
        eigenvalue=lam,
        eigenvector=v,
        status=status,
        iterations=len(trace),
        trace=trace,
        lambda_trace=lambda_trace,
        residual=residual,
        verified=verified,
        delta=cfg.delta,
        wall_time=wall_time,
    )


def power_method(a: DQMatrix, v0: DQVector, cfg: Optional[SolverConfig] = None) -> EigResult:
    """
    이원 사원수 행렬의 지배 고유쌍을 거듭제곱법으로 계산

    Args:
        a: n x n 이원 사원수 행렬
        v0: 초기 벡터 (표준부가 0이 아니어야 함)
        cfg: 반복 설정

    Returns:
        EigResult
    """
    cfg = cfg or SolverConfig.from_settings()
    _check_square(a, v0)
    logger.info(f"PM 시작: n={a.n_rows}, k_max={cfg.k_max}, δ={cfg.delta:.1e}")
    started = time.perf_counter()

    v, lam, status, trace, lambdas = _iterate(lambda x: dqm_mul(a, x), v0, cfg)
    return _finish(Algorithm.PM, a, v, lam, status, trace, lambdas, cfg, started)


def dcam_power_method(a: DQMatrix, v0: DQVector, cfg: Optional[SolverConfig] = None) -> EigResult:
    """
    이원 복소 수반 행렬 𝒥(Â)에 같은 반복을 적용

    고유벡터는 ℱ⁻¹로 되돌리고 고윳값은 i 성분만 갖는 이원 사원수로 돌려준다.

    Args:
        a: n x n 이원 사원수 행렬
        v0: 초기 벡터
        cfg: 반복 설정

    Returns:
        EigResult
    """
    cfg = cfg or SolverConfig.from_settings()
    _check_square(a, v0)
    logger.info(f"DCAM-PM 시작: n={a.n_rows} (수반 {2 * a.n_rows}), k_max={cfg.k_max}, δ={cfg.delta:.1e}")
    started = time.perf_counter()

    b = dcam_map(a)
    w, lam, status, trace, lambdas = _iterate(lambda x: dc_matvec(b, x), f_map(v0), cfg)
    return _finish(
        Algorithm.DCAM_PM,
        a,
        f_inv(w),
        DualQuaternion.from_dual_complex(lam),
        status,
        trace,
        [DualQuaternion.from_dual_complex(p) for p in lambdas],
        cfg,
        started,
    )


SOLVERS = {
    Algorithm.PM: power_method,
    Algorithm.DCAM_PM: dcam_power_method,
}
