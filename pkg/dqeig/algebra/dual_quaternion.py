"""
이원 사원수 (q_s + q_d ε, ε² = 0)
"""
from dataclasses import dataclass

import numpy as np

from dqeig.algebra.dual import DualComplex, DualNumber
from dqeig.algebra.quaternion import ONE, ZERO, Quaternion, q_inv, q_mul
from dqeig.config import APPRECIABLE_TOL
from dqeig.errors import ClassRepresentativeUndefined, DomainError


@dataclass(frozen=True)
class DualQuaternion:
    """이원 사원수"""

    s: Quaternion = ZERO
    d: Quaternion = ZERO

    @classmethod
    def from_arrays(cls, standard, dual) -> "DualQuaternion":
        return cls(Quaternion.from_array(standard), Quaternion.from_array(dual))

    @classmethod
    def from_dual_number(cls, a: DualNumber) -> "DualQuaternion":
        return cls(Quaternion(a.s), Quaternion(a.d))

    @classmethod
    def from_dual_complex(cls, p: DualComplex) -> "DualQuaternion":
        """i 성분만 갖는 이원 사원수로 매장"""
        return cls(Quaternion(p.s.real, p.s.imag), Quaternion(p.d.real, p.d.imag))

    @classmethod
    def real(cls, s: float, d: float = 0.0) -> "DualQuaternion":
        return cls(Quaternion(s), Quaternion(d))

    def to_arrays(self):
        return self.s.to_array(), self.d.to_array()

    def __add__(self, other: "DualQuaternion") -> "DualQuaternion":
        return DualQuaternion(self.s + other.s, self.d + other.d)

    def __sub__(self, other: "DualQuaternion") -> "DualQuaternion":
        return DualQuaternion(self.s - other.s, self.d - other.d)

    def __neg__(self) -> "DualQuaternion":
        return DualQuaternion(-self.s, -self.d)

    def __mul__(self, other):
        if isinstance(other, DualQuaternion):
            return dq_mul(self, other)
        if isinstance(other, (int, float)):
            return DualQuaternion(self.s.scale(float(other)), self.d.scale(float(other)))
        return NotImplemented

    def conj(self) -> "DualQuaternion":
        return dq_conj(self)

    def magnitude(self) -> DualNumber:
        return dq_magnitude(self)

    def inv(self, tol: float = APPRECIABLE_TOL) -> "DualQuaternion":
        return dq_inv(self, tol)

    def is_appreciable(self, tol: float = APPRECIABLE_TOL) -> bool:
        return abs(self.s) > tol

    def is_unit(self, atol: float = 1e-12) -> bool:
        return abs(abs(self.s) - 1.0) <= atol and abs(self.s.dot(self.d)) <= atol

    def class_rep(self, tol: float = APPRECIABLE_TOL) -> DualComplex:
        return dq_class_rep(self, tol)

    def distance(self, other: "DualQuaternion") -> float:
        """두 부분 차이 크기 중 큰 값"""
        return max(abs(self.s - other.s), abs(self.d - other.d))


EPSILON = DualQuaternion(ZERO, ONE)
DQ_ONE = DualQuaternion(ONE, ZERO)


def dq_mul(p: DualQuaternion, q: DualQuaternion) -> DualQuaternion:
    """표준부 p_s q_s, 이원부 p_s q_d + p_d q_s"""
    return DualQuaternion(q_mul(p.s, q.s), q_mul(p.s, q.d) + q_mul(p.d, q.s))


def dq_conj(q: DualQuaternion) -> DualQuaternion:
    return DualQuaternion(q.s.conj(), q.d.conj())


def dq_magnitude(q: DualQuaternion, tol: float = APPRECIABLE_TOL) -> DualNumber:
    """
    이원 사원수의 크기 (음이 아닌 이원수)

    scalar(q_s* q_d + q_d* q_s) / (2|q_s|) = <q_s, q_d> / |q_s|

    Args:
        q: 이원 사원수
        tol: 가감성 임계값

    Returns:
        크기
    """
    ms = abs(q.s)
    if ms > tol:
        return DualNumber(ms, q.s.dot(q.d) / ms)
    return DualNumber(0.0, abs(q.d))


def dq_inv(q: DualQuaternion, tol: float = APPRECIABLE_TOL) -> DualQuaternion:
    """q_s⁻¹ - q_s⁻¹ q_d q_s⁻¹ ε"""
    if not q.is_appreciable(tol):
        raise DomainError(f"가감(appreciable)하지 않은 이원 사원수는 역원이 없습니다: {q}")
    s_inv = q_inv(q.s, tol)
    return DualQuaternion(s_inv, -q_mul(q_mul(s_inv, q.d), s_inv))


def dq_class_rep(q: DualQuaternion, tol: float = APPRECIABLE_TOL) -> DualComplex:
    """
    유사류 [q̂]의 이원 복소수 대표 (표준 허수부 ≥ 0)

    실수부와 허수부 크기(이원수)를 보존한다.

    Args:
        q: 이원 사원수
        tol: 벡터부를 0으로 간주하는 임계값

    Returns:
        대표 이원 복소수
    """
    v_s = q.s.vector
    v_d = q.d.vector
    norm_vs = float(np.linalg.norm(v_s))
    if norm_vs > tol:
        im_d = float(np.dot(v_s, v_d)) / norm_vs
        return DualComplex(complex(q.s.w, norm_vs), complex(q.d.w, im_d))
    if float(np.linalg.norm(v_d)) <= tol:
        return DualComplex(complex(q.s.w, 0.0), complex(q.d.w, 0.0))
    raise ClassRepresentativeUndefined(
        f"표준부 벡터부가 0이고 이원부 벡터부가 0이 아니어서 대표를 정할 수 없습니다: {q}"
    )

