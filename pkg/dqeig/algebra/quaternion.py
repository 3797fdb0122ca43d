"""
사원수 (w + x i + y j + z k)
"""
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from dqeig.config import APPRECIABLE_TOL
from dqeig.errors import DomainError


@dataclass(frozen=True)
class Quaternion:
    """결합적이지만 비가환인 사원수"""

    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    @classmethod
    def from_array(cls, values) -> "Quaternion":
        """길이 4 배열에서 생성"""
        w, x, y, z = (float(v) for v in values)
        return cls(w, x, y, z)

    def to_array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z], dtype=np.float64)

    def as_tuple(self) -> Tuple[float, float, float, float]:
        return (self.w, self.x, self.y, self.z)

    @property
    def scalar(self) -> float:
        return self.w

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=np.float64)

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return q_mul(self, other)
        if isinstance(other, (int, float)):
            return self.scale(float(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self.scale(float(other))
        return NotImplemented

    def scale(self, factor: float) -> "Quaternion":
        return Quaternion(self.w * factor, self.x * factor, self.y * factor, self.z * factor)

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm_squared(self) -> float:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def __abs__(self) -> float:
        return math.sqrt(self.norm_squared())

    def inv(self, tol: float = APPRECIABLE_TOL) -> "Quaternion":
        return q_inv(self, tol)

    def dot(self, other: "Quaternion") -> float:
        """scalar(conj(self) other)"""
        return self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z

    def isclose(self, other: "Quaternion", atol: float = 1e-12) -> bool:
        return abs(self - other) <= atol


ONE = Quaternion(1.0)
ZERO = Quaternion()
I = Quaternion(0.0, 1.0)
J = Quaternion(0.0, 0.0, 1.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def q_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """해밀턴 곱 (i² = j² = k² = ijk = -1)"""
    return Quaternion(
        p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
        p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
        p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
        p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
    )


def q_inv(q: Quaternion, tol: float = APPRECIABLE_TOL) -> Quaternion:
    """
    사원수 역원 q* / |q|²

    Args:
        q: 사원수
        tol: 크기가 이 값 이하이면 영 사원수로 간주

    Returns:
        역원
    """
    n2 = q.norm_squared()
    if math.sqrt(n2) <= tol:
        raise DomainError(f"영 사원수는 역원이 없습니다: {q}")
    return q.conj().scale(1.0 / n2)
