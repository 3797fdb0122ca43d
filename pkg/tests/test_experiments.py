"""
수치 실험 재현 테스트 (그래프 라플라시안, 지정 스펙트럼, 조르당 블록, 크기별 반복 수)
"""
import math

import numpy as np
import pytest

from dqeig.eig import dcam_power_method, estimate_rate, power_method, random_initial_vector
from dqeig.evaluation.metrics import trace_metrics
from dqeig.graphgen import (
    complex_dominant_spectrum,
    cycle_laplacian,
    jordan_experiment_matrix,
    prescribed_spectrum_matrix,
    size_sweep_spectrum,
    wheel_laplacian,
)
from dqeig.models.schemas import SolverConfig, Status

SOLVERS = [power_method, dcam_power_method]


@pytest.mark.parametrize("solver", SOLVERS)
def test_balanced_cycle4_converges_to_two(solver, cfg):
    _, lap = cycle_laplacian(4, np.random.default_rng(7))
    result = solver(lap, random_initial_vector(4, seed=1), cfg)

    assert result.status == Status.CONVERGED
    assert result.iterations <= 200
    assert result.residual <= cfg.delta * 1.01
    assert result.eigenvalue.s.w == pytest.approx(2.0, abs=1e-7)
    assert estimate_rate(result.trace) == pytest.approx(math.sqrt(2) / 2, abs=0.05)


@pytest.mark.parametrize("solver", SOLVERS)
def test_balanced_odd_cycle_does_not_converge(solver):
    _, lap = cycle_laplacian(3, np.random.default_rng(3))
    result = solver(lap, random_initial_vector(3, seed=1), SolverConfig(k_max=1000, delta=1e-10))
    assert result.status == Status.MAX_ITER
    assert result.iterations == 1000
    assert result.trace[-1] > 1e-3


@pytest.mark.parametrize("solver", SOLVERS)
@pytest.mark.parametrize("n, rate", [(4, math.sqrt(3) / 3), (5, 0.5)])
def test_balanced_wheel_rate(solver, n, rate, cfg):
    _, lap = wheel_laplacian(n, np.random.default_rng(n))
    result = solver(lap, random_initial_vector(n, seed=2), cfg)

    assert result.converged
    assert result.eigenvalue.s.w == pytest.approx(n - 1.0, abs=1e-7)
    assert estimate_rate(result.trace) == pytest.approx(rate, abs=0.05)


def test_complex_dominant_spectrum_separates_methods(cfg):
    n = 10
    a, _ = prescribed_spectrum_matrix(complex_dominant_spectrum(n), np.random.default_rng(0))
    v0 = random_initial_vector(n, seed=0)

    pm = power_method(a, v0, cfg)
    dcam = dcam_power_method(a, v0, cfg)

    assert pm.converged
    assert estimate_rate(pm.trace) == pytest.approx(math.sqrt(2 / 5), abs=0.05)
    assert dcam.status == Status.MAX_ITER
    assert dcam.iterations == cfg.k_max
    assert min(dcam.trace) >= 1e-3


def test_jordan_block_order_degrades_accuracy(cfg):
    seed = 4
    v0 = random_initial_vector(10, seed)
    runs = {}
    for n21 in (1, 3, 6, 9):
        a = jordan_experiment_matrix(10, n21, np.random.default_rng(seed))
        runs[n21] = trace_metrics(power_method(a, v0, cfg))

    assert all(m["settled"] for m in runs.values())
    assert runs[1]["converged"]

    floors = [runs[n21]["residual_floor"] for n21 in (1, 3, 6, 9)]
    fluctuations = [runs[n21]["fluctuation"] for n21 in (1, 3, 6, 9)]
    assert floors == sorted(floors)
    assert fluctuations == sorted(fluctuations)


@pytest.mark.parametrize("n21", [1, 3])
def test_jordan_experiment_converges_to_dominant(n21, cfg):
    a = jordan_experiment_matrix(10, n21, np.random.default_rng(4))
    result = power_method(a, random_initial_vector(10, seed=4), cfg)
    assert result.converged
    assert abs(result.eigenvalue.s) == pytest.approx(abs(1.1 + 1.1j), abs=1e-6)
    assert result.eigenvalue.s.w == pytest.approx(1.1, abs=1e-6)


def _check_size_sweep(n: int, trials: int, cfg: SolverConfig):
    for seed in range(trials):
        a, _ = prescribed_spectrum_matrix(size_sweep_spectrum(n), np.random.default_rng(seed))
        v0 = random_initial_vector(n, seed)
        pm = power_method(a, v0, cfg)
        dcam = dcam_power_method(a, v0, cfg)

        assert pm.converged and dcam.converged
        assert pm.residual <= cfg.delta * 1.01 and dcam.residual <= cfg.delta * 1.01
        assert abs(pm.iterations - 62) <= 12
        assert abs(dcam.iterations - 68) <= 14
        assert pm.class_representative().distance(dcam.class_representative()) <= 1e-8
        assert estimate_rate(pm.trace) == pytest.approx(1 / 1.5, abs=0.05)


def test_size_sweep_iteration_counts_n10(cfg):
    _check_size_sweep(10, 5, cfg)


@pytest.mark.slow
@pytest.mark.parametrize("n", [50, 100])
def test_size_sweep_iteration_counts_large(n, cfg):
    _check_size_sweep(n, 3, cfg)
