"""
환경 설정
"""
import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

load_dotenv()


class Settings(BaseSettings):
    """DQEIG_ 접두어 환경 변수 또는 .env 파일에서 읽는 설정"""

    model_config = SettingsConfigDict(
        env_prefix="DQEIG_",
        env_file=".env",
        extra="ignore",
    )

    log_level: str = Field(default_factory=lambda: os.getenv("LOG_LEVEL", "INFO"))
    default_seed: int = 0
    kmax: int = Field(1000, ge=1)
    tol: float = Field(1e-10, gt=0)
    breakdown_tol: float = Field(1e-150, ge=0)
    appreciable_tol: float = Field(1e-12, ge=0)
    cluster_tol: float = Field(1e-6, gt=0)
    rank_tol: float = Field(1e-8, gt=0)
    pair_tol: float = Field(1e-6, gt=0)
    output_dir: str = "./data"


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """설정 인스턴스 가져오기 (프로세스당 하나)"""
    return Settings()


# 가감성 판정 기본 임계값 (계산 규모 1.0 기준, 모듈 로드 시 고정)
APPRECIABLE_TOL = get_settings().appreciable_tol
