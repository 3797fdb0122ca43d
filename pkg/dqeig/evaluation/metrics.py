"""
평가 지표 계산
"""
from typing import Dict, List, Optional, Sequence

from dqeig.eig.rate import estimate_rate
from dqeig.errors import UndefinedRateError
from dqeig.models.schemas import EigResult, Status

# 이 값 이하의 잔차 바닥에 머문 MaxIter 실행은 정체(바닥 도달)로 본다
FLOOR_TOL = 1e-6
# 정체 판정에 쓰는 잔차 기록 끝 구간 비율
STALL_WINDOW = 0.25
# 끝 구간 최소 잔차가 전체 최소의 몇 배 안이어야 하는지
STALL_FACTOR = 100.0


def transient_end(trace: Sequence[float]) -> int:
    """첫 국소 최소의 위치 (잔차가 처음 다시 커지기 직전, 없으면 마지막 위치)"""
    for k in range(len(trace) - 1):
        if trace[k + 1] > trace[k]:
            return k
    return max(len(trace) - 1, 0)


def pre_convergence_fluctuation(trace: Sequence[float]) -> Optional[float]:
    """
    초기 과도 구간 이후의 최대 잔차

    무작위 초기 벡터에서 첫 국소 최소까지의 감소 구간은 제외한다.
    잔차가 단조 감소하면 마지막 잔차가 된다.
    """
    if not trace:
        return None
    return max(trace[transient_end(trace):])


def settled_at_floor(
    result: EigResult,
    floor_tol: float = FLOOR_TOL,
    window: float = STALL_WINDOW,
    factor: float = STALL_FACTOR,
) -> bool:
    """
    수렴했거나 δ 위의 잔차 바닥에 머물렀는지 여부

    MaxIter 실행은 최소 잔차가 floor_tol 이하이고, 기록 끝 구간의 최소 잔차가
    전체 최소의 factor 배 안에 있으면 바닥에 도달한 것으로 본다.

    Args:
        result: 풀이 결과
        floor_tol: 허용 가능한 잔차 바닥 상한
        window: 끝 구간 비율
        factor: 끝 구간과 전체 최소의 허용 배율

    Returns:
        바닥 도달 여부
    """
    if result.converged:
        return True
    trace = result.trace
    if not trace or result.status != Status.MAX_ITER:
        return False
    floor = min(trace)
    tail = trace[-max(1, int(len(trace) * window)):]
    return floor <= floor_tol and min(tail) <= factor * floor


def trace_metrics(result: EigResult) -> Dict:
    """
    단일 실행 지표

    Args:
        result: 풀이 결과

    Returns:
        지표 딕셔너리 (수렴률을 정할 수 없으면 estimated_rate는 None)
    """
    trace = result.trace
    try:
        rate = estimate_rate(trace, converged=result.converged)
    except UndefinedRateError:
        rate = None

    return {
        "algorithm": result.algorithm.value,
        "status": result.status.value,
        "converged": result.converged,
        "settled": settled_at_floor(result),
        "iterations": result.iterations,
        "final_residual": result.residual,
        "max_residual": max(trace) if trace else None,
        "fluctuation": pre_convergence_fluctuation(trace),
        "residual_floor": min(trace) if trace else None,
        "estimated_rate": rate,
        "wall_time": result.wall_time,
    }


def aggregate_metrics(all_metrics: List[Dict]) -> Dict:
    """
    여러 시행 결과 집계

    Args:
        all_metrics: trace_metrics 결과 리스트

    Returns:
        집계된 지표
    """
    if not all_metrics:
        return {}

    n = len(all_metrics)
    converged = [m for m in all_metrics if m.get("converged", False)]
    rates = [m["estimated_rate"] for m in all_metrics if m.get("estimated_rate") is not None]

    return {
        "total_trials": n,
        "convergence_rate": len(converged) / n,
        "avg_iterations": sum(m.get("iterations", 0) for m in all_metrics) / n,
        "avg_final_residual": sum(m.get("final_residual", 0.0) for m in all_metrics) / n,
        "avg_wall_time": sum(m.get("wall_time", 0.0) for m in all_metrics) / n,
        "avg_estimated_rate": sum(rates) / len(rates) if rates else None,
    }
