"""
명령행 진입점: 행렬 생성, 풀이 실행, 검증, 스펙트럼 보고, 그래프 데이터 출력
"""
import argparse
import json
import logging
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np
from dotenv import load_dotenv
from pydantic import ValidationError

from dqeig.algebra.dual import DualComplex
from dqeig.config import get_settings
from dqeig.eig.power import SOLVERS, random_initial_vector
from dqeig.errors import BreakdownError, ClassRepresentativeUndefined, DQEigError, InputError
from dqeig.evaluation.metrics import trace_metrics
from dqeig.graphgen.laplacian import cycle_laplacian, wheel_laplacian
from dqeig.graphgen.spectrum import jordan_experiment_matrix, prescribed_spectrum_matrix
from dqeig.io.files import (
    atomic_write_text,
    load_matrix,
    load_result,
    load_vector,
    read_trace,
    save_matrix,
    save_result,
    write_trace,
)
from dqeig.linalg.matrix import DQMatrix, DQVector
from dqeig.models.schemas import (
    Algorithm,
    DualComplexPayload,
    DualQuaternionPayload,
    EigResult,
    MatrixFile,
    MatrixMetadata,
    ResultFile,
    SolverConfig,
    Status,
    TraceHeader,
    VectorPayload,
)
from dqeig.oracle.report import assumption_report, verify_eigenpair

load_dotenv()

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NOT_VERIFIED = 1
EXIT_MAX_ITER = 2
EXIT_BREAKDOWN = 3
EXIT_INPUT = 4

STATUS_EXIT = {
    Status.CONVERGED: EXIT_OK,
    Status.MAX_ITER: EXIT_MAX_ITER,
    Status.BREAKDOWN: EXIT_BREAKDOWN,
}


def _emit(payload):
    """표준 출력에 JSON 한 덩어리"""
    if hasattr(payload, "model_dump_json"):
        print(payload.model_dump_json(indent=2))
    else:
        print(json.dumps(payload, ensure_ascii=False, indent=2))


def _save_or_print(out: Optional[str], a: DQMatrix, metadata: MatrixMetadata):
    if out:
        save_matrix(out, a, metadata)
    else:
        _emit(MatrixFile(n=a.n_rows, standard=a.std.tolist(), dual=a.dual.tolist(), metadata=metadata))


def load_eigs(path: str, n: int) -> List[DualComplex]:
    """
    고윳값 목록 JSON 읽기

    [{"standard": [re, im], "dual": [re, im]}, ...] 형식이며, 길이가 n보다 짧으면
    마지막 값을 반복해 채운다.
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            raw = json.load(f)
        items = [DualComplexPayload.model_validate(item) for item in raw]
    except FileNotFoundError as e:
        raise InputError(f"파일이 없습니다: {path}") from e
    except (json.JSONDecodeError, ValidationError, TypeError) as e:
        raise InputError(f"고윳값 목록 형식이 잘못되었습니다: {path} ({e})") from e
    if not items:
        raise InputError(f"고윳값 목록이 비어 있습니다: {path}")
    if len(items) > n:
        raise InputError(f"고윳값이 n={n}보다 많습니다: {len(items)}")
    eigs = [DualComplex(complex(*p.standard), complex(*p.dual)) for p in items]
    return eigs + [eigs[-1]] * (n - len(eigs))


def cmd_gen(args) -> int:
    """시험 행렬 생성"""
    rng = np.random.default_rng(args.seed)
    params = {"n": args.n}

    if args.family in ("cycle", "wheel"):
        builder = cycle_laplacian if args.family == "cycle" else wheel_laplacian
        _, a = builder(args.n, rng, balanced=not args.unbalanced)
        params["balanced"] = not args.unbalanced
    elif args.family == "spectrum":
        eigs = load_eigs(args.eigs, args.n)
        a, _ = prescribed_spectrum_matrix(eigs, rng)
        params["eigs"] = [DualComplexPayload.from_dc(e).model_dump() for e in eigs]
    else:
        a = jordan_experiment_matrix(args.n, args.n21, rng)
        params["n21"] = args.n21

    _save_or_print(args.out, a, MatrixMetadata(family=args.family, seed=args.seed, params=params))
    return EXIT_OK


def class_representative(result: EigResult) -> Optional[DualComplexPayload]:
    """유사류 대표 (정할 수 없으면 None)"""
    try:
        return DualComplexPayload.from_dc(result.class_representative())
    except ClassRepresentativeUndefined:
        logger.warning("유사류 대표를 정할 수 없습니다")
        return None


def summarize(result: EigResult, seed: Optional[int]) -> ResultFile:
    """run 결과 요약"""
    return ResultFile(
        algorithm=result.algorithm,
        status=result.status,
        iterations=result.iterations,
        residual=result.residual,
        eigenvalue=DualQuaternionPayload.from_dq(result.eigenvalue),
        class_representative=class_representative(result),
        estimated_rate=trace_metrics(result)["estimated_rate"],
        eigenvector=VectorPayload.from_vector(result.eigenvector),
        wall_time=result.wall_time,
        seed=seed,
    )


def _trace_path(out: str, k: int, repeat: int) -> Path:
    path = Path(out)
    if repeat == 1:
        return path
    return path.with_name(f"{path.stem}_r{k}{path.suffix or '.csv'}")


def _initial_vector(args, payload: MatrixFile, seed: int, n: int):
    """--v0 파일 > 행렬 파일의 초기 벡터 > 가우스 난수 순서"""
    if args.v0:
        return load_vector(args.v0), "file"
    if payload.initial_vector is not None:
        return payload.initial_vector.to_vector(), "fixture"
    return random_initial_vector(n, seed), "gaussian"


def cmd_run(args) -> int:
    """PM 또는 DCAM-PM 실행"""
    settings = get_settings()
    algorithm = Algorithm(args.algorithm)
    cfg = SolverConfig.from_settings(settings, k_max=args.kmax, delta=args.tol)
    a, payload = load_matrix(args.matrix)
    base_seed = settings.default_seed if args.seed is None else args.seed
    if args.repeat < 1:
        raise InputError(f"--repeat는 1 이상이어야 합니다: {args.repeat}")

    def trial(k: int):
        seed = base_seed + k
        v0, source = _initial_vector(args, payload, seed, a.n_rows)
        result = SOLVERS[algorithm](a, v0, cfg)
        if args.out:
            header = TraceHeader(
                algorithm=algorithm,
                n=a.n_rows,
                seed=seed if source == "gaussian" else None,
                delta=cfg.delta,
                kmax=cfg.k_max,
                status=result.status,
                iterations=result.iterations,
                wall_time=result.wall_time,
                v0=source,
                matrix=str(args.matrix),
            )
            write_trace(_trace_path(args.out, k, args.repeat), header, result)
        return summarize(result, seed if source == "gaussian" else None)

    if args.repeat == 1:
        summaries = [trial(0)]
    else:
        logger.info(f"{args.repeat}회 반복 실행 (시드 {base_seed}부터)")
        with ThreadPoolExecutor() as pool:
            summaries = list(pool.map(trial, range(args.repeat)))

    if args.result:
        if len(summaries) == 1:
            save_result(args.result, summaries[0])
        else:
            atomic_write_text(args.result, json.dumps([s.model_dump(mode="json") for s in summaries], indent=2) + "\n")

    if len(summaries) == 1:
        _emit(summaries[0])
    else:
        _emit([s.model_dump(mode="json") for s in summaries])
    return max(STATUS_EXIT[s.status] for s in summaries)


def cmd_verify(args) -> int:
    """결과 파일의 고유쌍 검증"""
    a, _ = load_matrix(args.matrix)
    result = load_result(args.result)
    v = result.eigenvector.to_vector()
    if len(v) != a.n_rows:
        raise InputError(f"고유벡터 길이({len(v)})가 행렬 크기({a.n_rows})와 다릅니다")
    verdict = verify_eigenpair(a, v, result.eigenvalue.to_dq(), tol=args.tol)
    _emit(verdict)
    return EXIT_OK if verdict.verified else EXIT_NOT_VERIFIED


def cmd_spectrum(args) -> int:
    """표준 고윳값과 가정 판정"""
    a, _ = load_matrix(args.matrix)
    _emit(assumption_report(a, method=args.method))
    return EXIT_OK


def plot_lines(rows: Sequence[dict]) -> List[str]:
    """(iter, log10 res) 두 열"""
    lines = []
    for row in rows:
        res = row["res"]
        value = math.log10(res) if res > 0 else float("-inf")
        lines.append(f"{row['iter']} {value!r}")
    return lines


def cmd_plotdata(args) -> int:
    """그래프용 두 열 데이터"""
    _, rows = read_trace(args.trace)
    text = "\n".join(plot_lines(rows)) + "\n"
    if args.out:
        atomic_write_text(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


class CliParser(argparse.ArgumentParser):
    """인자 오류를 InputError로 올리는 파서 (하위 명령 파서도 같은 클래스를 쓴다)"""

    def error(self, message: str):
        raise InputError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = CliParser(prog="dqeig", description="이원 사원수 행렬 지배 고유쌍 풀이 도구")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="시험 행렬 생성")
    families = gen.add_subparsers(dest="family", required=True)
    for family in ("cycle", "wheel"):
        p = families.add_parser(family, help=f"균형 {family} 라플라시안")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--unbalanced", action="store_true", help="게이지 없이 가중치를 독립적으로 뽑기")
    p = families.add_parser("spectrum", help="지정 스펙트럼 행렬")
    p.add_argument("--eigs", required=True, help="고윳값 목록 JSON")
    p.add_argument("--n", type=int, required=True)
    p = families.add_parser("jordan", help="조르당 블록 실험 행렬")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--n21", type=int, required=True)
    for p in families.choices.values():
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--out", default=None, help="저장 경로 (없으면 표준 출력)")

    run = sub.add_parser("run", help="PM / DCAM-PM 실행")
    run.add_argument("algorithm", choices=[a.value for a in Algorithm])
    run.add_argument("--matrix", required=True)
    run.add_argument("--seed", type=int, default=None)
    run.add_argument("--v0", default=None, help="초기 벡터 JSON")
    run.add_argument("--kmax", type=int, default=None)
    run.add_argument("--tol", type=float, default=None)
    run.add_argument("--out", default=None, help="잔차 기록 CSV")
    run.add_argument("--result", default=None, help="결과 요약 JSON")
    run.add_argument("--repeat", type=int, default=1, help="시드를 바꿔 반복할 횟수")

    verify = sub.add_parser("verify", help="고유쌍 검증")
    verify.add_argument("--matrix", required=True)
    verify.add_argument("--result", required=True)
    verify.add_argument("--tol", type=float, default=1e-8)

    spectrum = sub.add_parser("spectrum", help="표준 고윳값 보고")
    spectrum.add_argument("--matrix", required=True)
    spectrum.add_argument("--method", choices=["qr", "lapack"], default="qr")

    plot = sub.add_parser("plotdata", help="(iter, log10 res) 출력")
    plot.add_argument("--trace", required=True)
    plot.add_argument("--out", default=None)

    return parser


COMMANDS = {
    "gen": cmd_gen,
    "run": cmd_run,
    "verify": cmd_verify,
    "spectrum": cmd_spectrum,
    "plotdata": cmd_plotdata,
}


def _fail(e: Exception, code: int) -> int:
    sys.stderr.write(json.dumps({"error": type(e).__name__, "message": str(e)}, ensure_ascii=False) + "\n")
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    """CLI 실행 후 종료 코드 반환"""
    settings = get_settings()
    logging.basicConfig(
        level=settings.log_level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "seed", None) is None and args.command == "gen":
            args.seed = settings.default_seed
        return COMMANDS[args.command](args)
    except BreakdownError as e:
        logger.error(f"반복 붕괴: {e}")
        return _fail(e, EXIT_BREAKDOWN)
    except (DQEigError, ValidationError) as e:
        logger.error(f"입력 오류: {e}")
        return _fail(e, EXIT_INPUT)
    except Exception as e:
        logger.error(f"처리 중 오류 발생: {e}", exc_info=True)
        return _fail(e, EXIT_INPUT)


if __name__ == "__main__":
    sys.exit(main())
