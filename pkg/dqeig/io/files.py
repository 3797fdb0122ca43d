"""
행렬/벡터 JSON, 잔차 기록 CSV 입출력
"""
import csv
import io
import json
import logging
import os
import tempfile
from pathlib import Path
from typing import List, Optional, Tuple, Union

from pydantic import BaseModel, ValidationError

from dqeig.errors import InputError
from dqeig.linalg.matrix import DQMatrix, DQVector
from dqeig.models.schemas import (
    EigResult,
    MatrixFile,
    MatrixMetadata,
    ResultFile,
    TraceHeader,
    VectorPayload,
)

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

TRACE_COLUMNS = ["iter", "res", "ls_w", "ls_x", "ls_y", "ls_z", "ld_w", "ld_x", "ld_y", "ld_z"]
HEADER_PREFIX = "# "


def atomic_write_text(path: PathLike, text: str):
    """같은 디렉토리의 임시 파일에 쓴 뒤 os.replace로 교체"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        os.replace(tmp, path)
    except Exception:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _read_model(path: PathLike, model: type) -> BaseModel:
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
        return model.model_validate(data)
    except FileNotFoundError as e:
        raise InputError(f"파일이 없습니다: {path}") from e
    except json.JSONDecodeError as e:
        raise InputError(f"JSON 형식이 잘못되었습니다: {path} ({e})") from e
    except ValidationError as e:
        raise InputError(f"{model.__name__} 형식이 잘못되었습니다: {path} ({e.error_count()}개 오류)") from e


def _write_model(path: PathLike, payload: BaseModel):
    atomic_write_text(path, payload.model_dump_json(indent=2) + "\n")


def save_matrix(
    path: PathLike,
    a: DQMatrix,
    metadata: Optional[MatrixMetadata] = None,
    initial_vector: Optional[DQVector] = None,
) -> MatrixFile:
    """
    행렬을 JSON으로 저장

    Args:
        path: 저장 경로
        a: 정사각 행렬
        metadata: 생성 정보
        initial_vector: 함께 저장할 초기 벡터

    Returns:
        저장한 MatrixFile
    """
    if not a.is_square():
        raise InputError(f"정사각 행렬만 저장할 수 있습니다: {a.shape}")
    payload = MatrixFile(
        n=a.n_rows,
        standard=a.std.tolist(),
        dual=a.dual.tolist(),
        metadata=metadata or MatrixMetadata(),
        initial_vector=VectorPayload.from_vector(initial_vector) if initial_vector is not None else None,
    )
    _write_model(path, payload)
    logger.info(f"행렬 저장: {path} (n={a.n_rows}, {payload.metadata.family})")
    return payload


def load_matrix(path: PathLike) -> Tuple[DQMatrix, MatrixFile]:
    """JSON 행렬 읽기"""
    payload = _read_model(path, MatrixFile)
    return DQMatrix(payload.standard, payload.dual), payload


def save_vector(path: PathLike, v: DQVector):
    _write_model(path, VectorPayload.from_vector(v))


def load_vector(path: PathLike) -> DQVector:
    return _read_model(path, VectorPayload).to_vector()


def save_result(path: PathLike, result: ResultFile):
    _write_model(path, result)


def load_result(path: PathLike) -> ResultFile:
    return _read_model(path, ResultFile)


def format_trace(header: TraceHeader, result: EigResult) -> str:
    """머리말 JSON 한 줄과 CSV 본문"""
    buffer = io.StringIO()
    buffer.write(HEADER_PREFIX + header.model_dump_json() + "\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(TRACE_COLUMNS)
    for k, (res, lam) in enumerate(zip(result.trace, result.lambda_trace), start=1):
        writer.writerow([k, repr(res), *(repr(x) for x in lam.s.as_tuple()), *(repr(x) for x in lam.d.as_tuple())])
    return buffer.getvalue()


def write_trace(path: PathLike, header: TraceHeader, result: EigResult):
    atomic_write_text(path, format_trace(header, result))
    logger.info(f"잔차 기록 저장: {path} ({result.iterations}행)")


def read_trace(path: PathLike) -> Tuple[TraceHeader, List[dict]]:
    """
    잔차 기록 CSV 읽기

    Returns:
        (머리말, 행 목록): 각 행은 iter(int)와 나머지 float 열
    """
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8", newline="") as f:
            first = f.readline()
            if not first.startswith(HEADER_PREFIX):
                raise InputError(f"잔차 기록 머리말이 없습니다: {path}")
            header = TraceHeader.model_validate_json(first[len(HEADER_PREFIX):])
            reader = csv.DictReader(f)
            if reader.fieldnames != TRACE_COLUMNS:
                raise InputError(f"잔차 기록 열이 잘못되었습니다: {reader.fieldnames}")
            rows = [
                {key: (int(value) if key == "iter" else float(value)) for key, value in row.items()}
                for row in reader
            ]
    except FileNotFoundError as e:
        raise InputError(f"파일이 없습니다: {path}") from e
    except (ValidationError, ValueError) as e:
        if isinstance(e, InputError):
            raise
        raise InputError(f"잔차 기록 형식이 잘못되었습니다: {path} ({e})") from e
    return header, rows
