"""
예외 정의

모든 예외는 ValueError를 상속하므로 기존처럼 ValueError로 잡아도 된다.
"""


class DQEigError(ValueError):
    """패키지 공통 예외"""


class DomainError(DQEigError):
    """정의역 밖의 입력 (영 사원수 역원, 비가감 이원수 나눗셈 등)"""


class ClassRepresentativeUndefined(DomainError):
    """표준부 벡터부가 0이고 이원부 벡터부가 0이 아닌 경우"""


class DimensionError(DQEigError):
    """행렬/벡터 차원 불일치"""


class SingularMatrixError(DQEigError):
    """수치적으로 특이한 행렬"""


class BreakdownError(DQEigError):
    """반복 벡터의 표준부가 사라져 정규화가 불가능한 경우"""


class UndefinedRateError(DQEigError):
    """수렴률 추정에 필요한 점이 부족한 경우"""


class InconsistentSpectrumError(DQEigError):
    """수반 행렬 스펙트럼의 켤레 짝이 맞지 않는 경우"""


class DegenerateSpectrumError(DQEigError):
    """지배 표준 고윳값이 0인 경우"""


class ConvergenceError(DQEigError):
    """QR 반복이 수렴하지 않은 경우"""


class GenerationError(DQEigError):
    """무작위 행렬 생성 재시도 초과"""


class InputError(DQEigError):
    """잘못된 파일/CLI 입력"""
