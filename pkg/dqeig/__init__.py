"""
비에르미트 이원 사원수 행렬의 지배 고윳값 계산 패키지
"""
__version__ = "1.0.0"
