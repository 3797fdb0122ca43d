import math

import pytest

from dqeig.algebra.dual_quaternion import DualQuaternion
from dqeig.config import Settings
from dqeig.eig import power_method
from dqeig.evaluation.metrics import (
    aggregate_metrics,
    pre_convergence_fluctuation,
    settled_at_floor,
    trace_metrics,
    transient_end,
)
from dqeig.graphgen import fail_iv
from dqeig.linalg.matrix import DQVector
from dqeig.models.schemas import Algorithm, EigResult, SolverConfig, Status


def _result(trace, status=Status.MAX_ITER):
    return EigResult(
        algorithm=Algorithm.PM,
        eigenvalue=DualQuaternion(),
        eigenvector=DQVector.zeros(1),
        status=status,
        iterations=len(trace),
        trace=trace,
        residual=trace[-1],
    )


def test_trace_metrics_without_rate():
    a, v0 = fail_iv()
    metrics = trace_metrics(power_method(a, v0, SolverConfig(k_max=5)))
    assert metrics["status"] == "MaxIter"
    assert metrics["converged"] is False
    assert metrics["settled"] is False
    assert metrics["iterations"] == 5
    assert metrics["estimated_rate"] is None
    assert metrics["max_residual"] >= metrics["residual_floor"]
    assert metrics["fluctuation"] == pytest.approx(math.sqrt(2) / 3, rel=1e-8)


@pytest.mark.parametrize(
    "trace, end, fluctuation",
    [
        ([10.0, 5.0, 2.0, 1.0], 3, 1.0),
        ([10.0, 4.0, 8.0, 3.0, 0.5], 1, 8.0),
        ([3.0, 7.0, 1.0], 0, 7.0),
        ([2.0], 0, 2.0),
    ],
)
def test_fluctuation_skips_initial_descent(trace, end, fluctuation):
    assert transient_end(trace) == end
    assert pre_convergence_fluctuation(trace) == fluctuation


def test_fluctuation_of_empty_trace():
    assert pre_convergence_fluctuation([]) is None


def test_settled_at_floor():
    assert settled_at_floor(_result([1.0, 1e-11], Status.CONVERGED))
    assert settled_at_floor(_result([1.0] * 10 + [1e-8, 3e-8] * 15))
    # 바닥이 너무 높음
    assert not settled_at_floor(_result([1.0] * 40))
    # 바닥에 닿은 뒤 다시 커짐
    assert not settled_at_floor(_result([1.0] * 10 + [1e-9] * 20 + [1e-2] * 10))
    assert not settled_at_floor(_result([1.0, 1e-8], Status.BREAKDOWN))


def test_aggregate_metrics():
    rows = [
        {"converged": True, "iterations": 10, "final_residual": 1e-11, "wall_time": 0.5, "estimated_rate": 0.5},
        {"converged": False, "iterations": 30, "final_residual": 1e-3, "wall_time": 1.5, "estimated_rate": None},
    ]
    agg = aggregate_metrics(rows)
    assert agg["total_trials"] == 2
    assert agg["convergence_rate"] == 0.5
    assert agg["avg_iterations"] == 20
    assert agg["avg_wall_time"] == 1.0
    assert agg["avg_estimated_rate"] == 0.5
    assert aggregate_metrics([]) == {}


def test_settings_read_prefixed_environment(monkeypatch):
    monkeypatch.setenv("DQEIG_KMAX", "77")
    monkeypatch.setenv("DQEIG_TOL", "1e-8")
    settings = Settings()
    assert settings.kmax == 77
    cfg = SolverConfig.from_settings(settings)
    assert cfg.k_max == 77 and cfg.delta == 1e-8
