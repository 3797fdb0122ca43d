"""
이원수 (a_s + a_d ε)와 이원 복소수
"""
from dataclasses import dataclass

from dqeig.config import APPRECIABLE_TOL
from dqeig.errors import DomainError


@dataclass(frozen=True, order=True)
class DualNumber:
    """
    이원수

    필드 순서(s, d)대로 비교하므로 대소 관계는 사전식 순서가 된다.
    """

    s: float = 0.0
    d: float = 0.0

    def __add__(self, other: "DualNumber") -> "DualNumber":
        other = _as_dual(other)
        return DualNumber(self.s + other.s, self.d + other.d)

    __radd__ = __add__

    def __sub__(self, other: "DualNumber") -> "DualNumber":
        other = _as_dual(other)
        return DualNumber(self.s - other.s, self.d - other.d)

    def __rsub__(self, other) -> "DualNumber":
        return _as_dual(other) - self

    def __neg__(self) -> "DualNumber":
        return DualNumber(-self.s, -self.d)

    def __mul__(self, other: "DualNumber") -> "DualNumber":
        other = _as_dual(other)
        return DualNumber(self.s * other.s, self.s * other.d + self.d * other.s)

    __rmul__ = __mul__

    def __truediv__(self, other: "DualNumber") -> "DualNumber":
        return dn_div(self, _as_dual(other))

    def __rtruediv__(self, other) -> "DualNumber":
        return dn_div(_as_dual(other), self)

    def is_nonnegative(self) -> bool:
        return self.s > 0 or (self.s == 0 and self.d >= 0)

    def is_positive(self) -> bool:
        return self.s > 0 or (self.s == 0 and self.d > 0)

    def isclose(self, other: "DualNumber", atol: float = 1e-12) -> bool:
        other = _as_dual(other)
        return abs(self.s - other.s) <= atol and abs(self.d - other.d) <= atol


def _as_dual(value) -> DualNumber:
    if isinstance(value, DualNumber):
        return value
    if isinstance(value, (int, float)):
        return DualNumber(float(value), 0.0)
    raise TypeError(f"이원수로 변환할 수 없습니다: {value!r}")


def dn_div(b: DualNumber, a: DualNumber, tol: float = APPRECIABLE_TOL) -> DualNumber:
    """
    이원수 나눗셈 b / a

    a_s = 0 = b_s 인 경우 결과의 이원부(임의 상수)는 0으로 고정한다.

    Args:
        b: 피제수
        a: 제수
        tol: 표준부를 0으로 간주하는 임계값

    Returns:
        몫
    """
    if abs(a.s) > tol:
        q = b.s / a.s
        return DualNumber(q, b.d / a.s - q * (a.d / a.s))
    if abs(b.s) <= tol and abs(a.d) > tol:
        return DualNumber(b.d / a.d, 0.0)
    raise DomainError(f"이원수 나눗셈이 정의되지 않습니다: {b} / {a}")


def dn_cmp(a: DualNumber, b: DualNumber) -> int:
    """사전식 비교 (-1, 0, 1)"""
    if a < b:
        return -1
    if a > b:
        return 1
    return 0


@dataclass(frozen=True)
class DualComplex:
    """이원 복소수 (곱셈이 가환)"""

    s: complex = 0j
    d: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "s", complex(self.s))
        object.__setattr__(self, "d", complex(self.d))

    def __add__(self, other: "DualComplex") -> "DualComplex":
        return DualComplex(self.s + other.s, self.d + other.d)

    def __sub__(self, other: "DualComplex") -> "DualComplex":
        return DualComplex(self.s - other.s, self.d - other.d)

    def __neg__(self) -> "DualComplex":
        return DualComplex(-self.s, -self.d)

    def __mul__(self, other: "DualComplex") -> "DualComplex":
        if not isinstance(other, DualComplex):
            return NotImplemented
        return DualComplex(self.s * other.s, self.s * other.d + self.d * other.s)

    def conj(self) -> "DualComplex":
        return DualComplex(self.s.conjugate(), self.d.conjugate())

    def magnitude(self) -> DualNumber:
        """|p̂| (표준부가 0이면 |p_d| ε)"""
        ms = abs(self.s)
        if ms > APPRECIABLE_TOL:
            return DualNumber(ms, (self.s.conjugate() * self.d).real / ms)
        return DualNumber(0.0, abs(self.d))

    def isclose(self, other: "DualComplex", atol: float = 1e-12) -> bool:
        return abs(self.s - other.s) <= atol and abs(self.d - other.d) <= atol

    def distance(self, other: "DualComplex") -> float:
        """두 부분 차이의 큰 값"""
        return max(abs(self.s - other.s), abs(self.d - other.d))

