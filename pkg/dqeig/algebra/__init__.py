"""
스칼라 대수: 사원수, 이원수, 이원 복소수, 이원 사원수
"""
from dqeig.algebra.dual import DualComplex, DualNumber, dn_cmp, dn_div
from dqeig.algebra.dual_quaternion import (
    DQ_ONE,
    EPSILON,
    DualQuaternion,
    dq_class_rep,
    dq_conj,
    dq_inv,
    dq_magnitude,
    dq_mul,
)
from dqeig.algebra.quaternion import I, J, K, ONE, ZERO, Quaternion, q_inv, q_mul

__all__ = [
    "Quaternion",
    "DualNumber",
    "DualComplex",
    "DualQuaternion",
    "q_mul",
    "q_inv",
    "dq_mul",
    "dq_conj",
    "dq_magnitude",
    "dq_inv",
    "dn_div",
    "dn_cmp",
    "dq_class_rep",
    "ONE",
    "ZERO",
    "I",
    "J",
    "K",
    "EPSILON",
    "DQ_ONE",
]
