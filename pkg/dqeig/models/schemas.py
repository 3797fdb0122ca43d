"""
Pydantic 스키마 정의
"""
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_serializer, model_validator

from dqeig.algebra.dual import DualComplex
from dqeig.algebra.dual_quaternion import DualQuaternion
from dqeig.config import APPRECIABLE_TOL, Settings, get_settings
from dqeig.linalg.matrix import DQVector

FORMAT_VERSION = 1
# 유사류 대표에서 벡터부를 0으로 볼 때 δ에 곱하는 배수
CLASS_REP_SCALE = 100.0


class Status(str, Enum):
    """반복 종료 상태"""
    CONVERGED = "Converged"
    MAX_ITER = "MaxIter"
    BREAKDOWN = "Breakdown"


class Algorithm(str, Enum):
    """고유쌍 풀이 알고리즘"""
    PM = "pm"
    DCAM_PM = "dcam-pm"


class SolverConfig(BaseModel):
    """거듭제곱법 설정"""
    model_config = ConfigDict(frozen=True)

    k_max: int = Field(1000, ge=1, description="최대 반복 횟수")
    delta: float = Field(1e-10, gt=0, description="잔차 허용오차 δ")
    breakdown_tol: float = Field(1e-150, ge=0, description="표준부 소멸 판정 임계값")

    @classmethod
    def from_settings(cls, settings: Optional[Settings] = None, **overrides) -> "SolverConfig":
        """환경 설정에서 생성 (None이 아닌 인자로 덮어쓰기)"""
        settings = settings or get_settings()
        values = {"k_max": settings.kmax, "delta": settings.tol, "breakdown_tol": settings.breakdown_tol}
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


class EigResult(BaseModel):
    """거듭제곱법 결과"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    algorithm: Algorithm = Field(..., description="사용한 알고리즘")
    eigenvalue: DualQuaternion = Field(..., description="고윳값 λ̂ (DCAM-PM은 i 성분만 가짐)")
    eigenvector: DQVector = Field(..., description="고유벡터 v̂")
    status: Status = Field(..., description="종료 상태")
    iterations: int = Field(..., ge=0, description="수행한 반복 수")
    trace: List[float] = Field(default_factory=list, description="반복별 잔차 ‖ŷ - v̂λ̂‖_{2^R}")
    lambda_trace: List[DualQuaternion] = Field(default_factory=list, description="반복별 λ̂")
    residual: float = Field(..., description="결과 쌍에 대해 다시 계산한 잔차")
    verified: bool = Field(False, description="수렴 시 사후 잔차 검증 통과 여부")
    delta: float = Field(1e-10, gt=0, description="실행에 쓴 잔차 허용오차 δ")
    wall_time: float = Field(0.0, description="소요 시간 (초)")

    @property
    def converged(self) -> bool:
        return self.status == Status.CONVERGED

    def class_representative(self) -> DualComplex:
        """
        고윳값의 유사류 대표

        크기가 max(APPRECIABLE_TOL, 100δ) 이하인 벡터부는 0으로 본다.

        Raises:
            ClassRepresentativeUndefined: 표준 벡터부는 0이고 이원 벡터부만 남은 경우
        """
        return self.eigenvalue.class_rep(tol=max(APPRECIABLE_TOL, CLASS_REP_SCALE * self.delta))

    @model_validator(mode="after")
    def _check_trace_length(self):
        if len(self.trace) != self.iterations:
            raise ValueError(f"잔차 기록 길이({len(self.trace)})가 반복 수({self.iterations})와 다릅니다")
        return self


class SpectrumReport(BaseModel):
    """표준 고윳값과 가정 판정"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    standard_eigs: List[complex] = Field(..., description="표준 고윳값 (크기, 실수부 내림차순)")
    dominant: complex = Field(..., description="지배 표준 고윳값 λ₁ₛ")
    gap_ratio: float = Field(..., ge=0.0, le=1.0, description="|λ₂ₛ| / |λ₁ₛ|")
    dominant_simple: bool = Field(..., description="지배 군집 크기가 1인지 여부")
    alg_mult: int = Field(..., description="지배 군집의 대수적 중복도")
    geo_mult: int = Field(..., description="지배 고윳값의 기하적 중복도 (사원수 기준)")
    assumption1: bool = Field(..., description="gap_ratio < 1 이고 대수 = 기하 중복도")
    assumption2i: bool = Field(..., description="assumption1 이고 λ₁ₛ 실수")
    assumption2ii: bool = Field(..., description="대수 = 기하 중복도 = 1")
    assumption2: bool = Field(..., description="2(i) 또는 2(ii)")
    dual_conditions_checked: bool = Field(False, description="이원부 조건 검사 여부 (항상 False)")
    note: str = Field(
        "이원부 중복도 조건은 유한 절차로 판정할 수 없어 검사하지 않습니다",
        description="판정 범위 안내",
    )

    @field_serializer("standard_eigs")
    def _serialize_eigs(self, eigs: List[complex]) -> List[List[float]]:
        return [[z.real, z.imag] for z in eigs]

    @field_serializer("dominant")
    def _serialize_dominant(self, z: complex) -> List[float]:
        return [z.real, z.imag]


class EigenpairVerdict(BaseModel):
    """고유쌍 검증 결과"""
    verified: bool = Field(..., description="상대 잔차 ≤ tol")
    residual: float = Field(..., description="‖Âv̂ - v̂λ̂‖_{2^R}")
    relative_residual: float = Field(..., description="residual / ‖Â‖_{F^R}")
    standard_residual: float = Field(..., description="‖A_s x_s - x_s λ_s‖")
    dual_residual: float = Field(..., description="‖A_s x_d + A_d x_s - x_s λ_d - x_d λ_s‖")
    tol: float = Field(..., description="사용한 허용오차")


class VectorPayload(BaseModel):
    """이원 사원수 벡터 JSON"""
    format_version: int = Field(FORMAT_VERSION, description="형식 버전")
    standard: List[List[float]] = Field(..., description="n x 4 표준부")
    dual: List[List[float]] = Field(..., description="n x 4 이원부")

    @model_validator(mode="after")
    def _check_shapes(self):
        std = np.asarray(self.standard, dtype=np.float64)
        dual = np.asarray(self.dual, dtype=np.float64)
        if std.ndim != 2 or std.shape[1:] != (4,) or std.shape != dual.shape:
            raise ValueError(f"벡터 모양이 잘못되었습니다: {std.shape} / {dual.shape}")
        return self

    @classmethod
    def from_vector(cls, v: DQVector) -> "VectorPayload":
        return cls(standard=v.std.tolist(), dual=v.dual.tolist())

    def to_vector(self) -> DQVector:
        return DQVector(self.standard, self.dual)


class MatrixMetadata(BaseModel):
    """생성 정보"""
    family: str = Field("custom", description="행렬 종류 (cycle, wheel, spectrum, jordan, fixture...)")
    seed: Optional[int] = Field(None, description="난수 시드")
    params: Dict[str, Any] = Field(default_factory=dict, description="생성 인자")


class MatrixFile(BaseModel):
    """이원 사원수 행렬 JSON"""
    format_version: int = Field(FORMAT_VERSION, description="형식 버전")
    n: int = Field(..., ge=1, description="행렬 크기")
    standard: List[List[List[float]]] = Field(..., description="n x n x 4 표준부")
    dual: List[List[List[float]]] = Field(..., description="n x n x 4 이원부")
    metadata: MatrixMetadata = Field(default_factory=MatrixMetadata, description="생성 정보")
    initial_vector: Optional[VectorPayload] = Field(None, description="고정 초기 벡터 (선택)")

    @model_validator(mode="after")
    def _check_shapes(self):
        expected = (self.n, self.n, 4)
        std = np.asarray(self.standard, dtype=np.float64)
        dual = np.asarray(self.dual, dtype=np.float64)
        if std.shape != expected or dual.shape != expected:
            raise ValueError(f"행렬 모양이 {expected}이어야 합니다: {std.shape} / {dual.shape}")
        if self.initial_vector is not None and len(self.initial_vector.standard) != self.n:
            raise ValueError(f"초기 벡터 길이가 n={self.n}과 다릅니다")
        return self


class TraceHeader(BaseModel):
    """잔차 기록 CSV 머리말"""
    algorithm: Algorithm = Field(..., description="알고리즘")
    n: int = Field(..., description="행렬 크기")
    seed: Optional[int] = Field(None, description="초기 벡터 시드")
    delta: float = Field(..., description="허용오차")
    kmax: int = Field(..., description="최대 반복 수")
    status: Status = Field(..., description="종료 상태")
    iterations: int = Field(..., description="반복 수")
    wall_time: float = Field(..., description="소요 시간 (초)")
    v0: str = Field("gaussian", description="초기 벡터 출처 (gaussian, file, fixture)")
    matrix: Optional[str] = Field(None, description="입력 행렬 파일")


class DualQuaternionPayload(BaseModel):
    """이원 사원수 JSON"""
    standard: Tuple[float, float, float, float] = Field(..., description="[w, x, y, z]")
    dual: Tuple[float, float, float, float] = Field(..., description="[w, x, y, z]")

    @classmethod
    def from_dq(cls, q: DualQuaternion) -> "DualQuaternionPayload":
        return cls(standard=q.s.as_tuple(), dual=q.d.as_tuple())

    def to_dq(self) -> DualQuaternion:
        return DualQuaternion.from_arrays(self.standard, self.dual)


class DualComplexPayload(BaseModel):
    """이원 복소수 JSON ([실수부, 허수부])"""
    standard: Tuple[float, float] = Field(..., description="표준부")
    dual: Tuple[float, float] = Field(..., description="이원부")

    @classmethod
    def from_dc(cls, p: DualComplex) -> "DualComplexPayload":
        return cls(standard=(p.s.real, p.s.imag), dual=(p.d.real, p.d.imag))


class ResultFile(BaseModel):
    """run 결과 요약"""
    format_version: int = Field(FORMAT_VERSION, description="형식 버전")
    algorithm: Algorithm = Field(..., description="알고리즘")
    status: Status = Field(..., description="종료 상태")
    iterations: int = Field(..., description="반복 수")
    residual: float = Field(..., description="최종 잔차")
    eigenvalue: DualQuaternionPayload = Field(..., description="고윳값")
    class_representative: Optional[DualComplexPayload] = Field(None, description="유사류 대표 (정의되지 않으면 null)")
    estimated_rate: Optional[float] = Field(None, description="추정 수렴률 (정의되지 않으면 null)")
    eigenvector: VectorPayload = Field(..., description="고유벡터")
    wall_time: float = Field(0.0, description="소요 시간 (초)")
    seed: Optional[int] = Field(None, description="초기 벡터 시드")
