"""
이원 사원수 선형대수
"""
from dqeig.linalg.inverse import dqm_inverse, qmat_inverse
from dqeig.linalg.matrix import (
    DQMatrix,
    DQVector,
    dqm_conj_transpose,
    dqm_mul,
    dqm_normF,
    dqm_normFR,
    dqv_norm2,
    dqv_norm2R,
    dqv_normalize,
    residual_2R,
)

__all__ = [
    "DQMatrix",
    "DQVector",
    "dqm_mul",
    "dqm_conj_transpose",
    "dqv_norm2",
    "dqv_norm2R",
    "dqm_normF",
    "dqm_normFR",
    "dqv_normalize",
    "residual_2R",
    "qmat_inverse",
    "dqm_inverse",
]
