"""
수치 실험 스크립트
순환/바퀴 라플라시안, 지정 스펙트럼 비교, 조르당 블록, 크기별 반복 수 표를 실행하고
evaluation_results.json에 저장
"""
import argparse
import json
import logging
import os
from pathlib import Path
from typing import Dict, List

import numpy as np

from dqeig.config import get_settings
from dqeig.eig import SOLVERS, power_method, random_initial_vector
from dqeig.evaluation.metrics import aggregate_metrics, trace_metrics
from dqeig.graphgen.fixtures import complex_dominant_spectrum, size_sweep_spectrum
from dqeig.graphgen.laplacian import cycle_laplacian, wheel_laplacian
from dqeig.graphgen.spectrum import jordan_experiment_matrix, prescribed_spectrum_matrix
from dqeig.models.schemas import SolverConfig


def _solvers():
    """(알고리즘 이름, 풀이 함수) 목록"""
    return [(algorithm.value, solver) for algorithm, solver in SOLVERS.items()]


def _print_metrics(label: str, metrics: Dict):
    rate = metrics["estimated_rate"]
    rate_text = f"{rate:.4f}" if rate is not None else "-"
    print(
        f"  {label:<28} {metrics['status']:<10} 반복 {metrics['iterations']:>5}  "
        f"잔차 {metrics['final_residual']:.2e}  수렴률 {rate_text}"
    )


def run_graph_experiments(seed: int, cfg: SolverConfig) -> List[Dict]:
    """균형 순환/바퀴 라플라시안"""
    print("\n[1] 균형 순환 / 바퀴 라플라시안")
    rows = []
    for family, builder, sizes in (("cycle", cycle_laplacian, (3, 4)), ("wheel", wheel_laplacian, (4, 5))):
        for n in sizes:
            _, a = builder(n, np.random.default_rng(seed), balanced=True)
            v0 = random_initial_vector(n, seed)
            for name, solver in _solvers():
                metrics = trace_metrics(solver(a, v0, cfg))
                _print_metrics(f"{family} n={n} {name}", metrics)
                rows.append({"family": family, "n": n, **metrics})
    return rows


def run_complex_dominant(seed: int, cfg: SolverConfig, n: int = 10) -> List[Dict]:
    """지배 고윳값이 복소수인 지정 스펙트럼 (PM은 수렴, DCAM-PM은 정체)"""
    print(f"\n[2] 지정 스펙트럼 {{2+i+ε, 1+i+ε, …}} n={n}")
    rng = np.random.default_rng(seed)
    a, _ = prescribed_spectrum_matrix(complex_dominant_spectrum(n), rng)
    v0 = random_initial_vector(n, seed)
    rows = []
    for name, solver in _solvers():
        metrics = trace_metrics(solver(a, v0, cfg))
        _print_metrics(name, metrics)
        rows.append({"n": n, **metrics})
    return rows


def run_jordan(seed: int, cfg: SolverConfig, n: int = 10) -> List[Dict]:
    """표준부가 대각화되지 않는 행렬에서 조르당 블록 크기에 따른 PM 거동"""
    print(f"\n[3] 조르당 블록 실험 n={n}")
    rows = []
    for n21 in (1, 3, 6, 9):
        a = jordan_experiment_matrix(n, n21, np.random.default_rng(seed))
        metrics = trace_metrics(power_method(a, random_initial_vector(n, seed), cfg))
        _print_metrics(f"n21={n21}", metrics)
        print(
            f"  {'':<28} 바닥 도달 {metrics['settled']}  요동 {metrics['fluctuation']:.2e}  바닥 {metrics['residual_floor']:.2e}"
        )
        rows.append({"n": n, "n21": n21, **metrics})
    return rows


def run_size_sweep(seed: int, cfg: SolverConfig, sizes: List[int], trials: int) -> Dict:
    """{1.5+ε, 1+ε, …} 크기별 반복 수, 잔차, 시간"""
    print(f"\n[4] 크기별 성능 (시행 {trials}회)")
    sweep = {}
    for n in sizes:
        per_solver = {name: [] for name, _ in _solvers()}
        for t in range(trials):
            trial_seed = seed + t
            a, _ = prescribed_spectrum_matrix(size_sweep_spectrum(n), np.random.default_rng(trial_seed))
            v0 = random_initial_vector(n, trial_seed)
            for name, solver in _solvers():
                per_solver[name].append(trace_metrics(solver(a, v0, cfg)))
        sweep[n] = {name: aggregate_metrics(metrics) for name, metrics in per_solver.items()}
        for name, agg in sweep[n].items():
            print(
                f"  n={n:<4} {name:<8} 반복 {agg['avg_iterations']:.1f}  "
                f"잔차 {agg['avg_final_residual']:.2e}  시간 {agg['avg_wall_time']:.3f}s  "
                f"수렴 {agg['convergence_rate']:.0%}"
            )
    return sweep


def main():
    """메인 함수"""
    settings = get_settings()
    parser = argparse.ArgumentParser(description="거듭제곱법 수치 실험")
    parser.add_argument("--seed", type=int, default=settings.default_seed)
    parser.add_argument("--trials", type=int, default=10, help="크기별 시행 수")
    parser.add_argument("--large", action="store_true", help="n=200, 500 포함")
    parser.add_argument("--output", default="evaluation_results.json")
    args = parser.parse_args()

    logging.basicConfig(
        level=os.getenv("LOG_LEVEL", "WARNING"),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )

    cfg = SolverConfig.from_settings(settings)
    print(f"설정: k_max={cfg.k_max}, δ={cfg.delta:.1e}, seed={args.seed}")

    sizes = [10, 20, 50, 100] + ([200, 500] if args.large else [])
    results = {
        "graphs": run_graph_experiments(args.seed, cfg),
        "complex_dominant": run_complex_dominant(args.seed, cfg),
        "jordan": run_jordan(args.seed, cfg),
        "size_sweep": run_size_sweep(args.seed, cfg, sizes, args.trials),
    }

    output_file = Path(args.output)
    with open(output_file, "w", encoding="utf-8") as f:
        json.dump(results, f, ensure_ascii=False, indent=2)
    print(f"\n상세 결과 저장: {output_file}")


if __name__ == "__main__":
    main()
