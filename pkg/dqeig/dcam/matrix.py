"""
이원 복소수 벡터와 행렬

표준부와 이원부를 complex128 배열로 저장한다. 스칼라가 가환이므로 곱의 방향은 중요하지 않다.
"""
import math

import numpy as np

from dqeig.algebra.dual import DualComplex, DualNumber
from dqeig.algebra.qarray import real_sum
from dqeig.config import APPRECIABLE_TOL
from dqeig.errors import BreakdownError, DimensionError


def _as_complex(values, ndim: int) -> np.ndarray:
    arr = np.asarray(values, dtype=np.complex128)
    if arr.ndim != ndim:
        raise DimensionError(f"배열 차원이 잘못되었습니다: {arr.shape}")
    return arr


def _norm(a: np.ndarray) -> float:
    return math.sqrt(real_sum(a.real * a.real + a.imag * a.imag))


def _inner_real(a: np.ndarray, b: np.ndarray) -> float:
    """Re(a^H b)"""
    return real_sum(a.real * b.real + a.imag * b.imag)


class DCVector:
    """이원 복소수 벡터 ŵ = w_s + w_d ε"""

    __slots__ = ("std", "dual")

    def __init__(self, std, dual=None):
        self.std = _as_complex(std, 1)
        self.dual = np.zeros_like(self.std) if dual is None else _as_complex(dual, 1)
        if self.std.shape != self.dual.shape:
            raise DimensionError(f"표준부와 이원부 길이가 다릅니다: {self.std.shape} vs {self.dual.shape}")

    def __len__(self) -> int:
        return self.std.shape[0]

    def __getitem__(self, index: int) -> DualComplex:
        return DualComplex(self.std[index], self.dual[index])

    def __add__(self, other: "DCVector") -> "DCVector":
        _check_same_length(self, other)
        return DCVector(self.std + other.std, self.dual + other.dual)

    def __sub__(self, other: "DCVector") -> "DCVector":
        _check_same_length(self, other)
        return DCVector(self.std - other.std, self.dual - other.dual)

    def right_mul(self, alpha: DualComplex) -> "DCVector":
        return DCVector(self.std * alpha.s, self.std * alpha.d + self.dual * alpha.s)

    def conj_dot(self, other: "DCVector") -> DualComplex:
        """ŵ^H û"""
        _check_same_length(self, other)
        std = np.vdot(self.std, other.std)
        dual = np.vdot(self.std, other.dual) + np.vdot(self.dual, other.std)
        return DualComplex(complex(std), complex(dual))

    def std_norm(self) -> float:
        return _norm(self.std)

    def norm2(self, tol: float = APPRECIABLE_TOL) -> DualNumber:
        ns = _norm(self.std)
        if ns > tol:
            return DualNumber(ns, _inner_real(self.std, self.dual) / ns)
        return DualNumber(0.0, _norm(self.dual))

    def norm2R(self) -> float:
        return math.hypot(_norm(self.std), _norm(self.dual))

    def normalize(self, tol: float = APPRECIABLE_TOL) -> "DCVector":
        norm = self.norm2(tol)
        if norm.s <= tol:
            raise BreakdownError(f"표준부 노름이 너무 작아 정규화할 수 없습니다: {norm.s:.3e}")
        a_s, a_d = norm.s, norm.d
        return DCVector(self.std / a_s, self.dual / a_s - self.std * (a_d / (a_s * a_s)))

    def __repr__(self) -> str:
        return f"DCVector(n={len(self)})"


class DCMatrix:
    """이원 복소수 행렬 B̂ = B_s + B_d ε"""

    def __init__(self, std, dual=None):
        self.std = _as_complex(std, 2)
        self.dual = np.zeros_like(self.std) if dual is None else _as_complex(dual, 2)
        if self.std.shape != self.dual.shape:
            raise DimensionError(f"표준부와 이원부 모양이 다릅니다: {self.std.shape} vs {self.dual.shape}")

    @classmethod
    def identity(cls, n: int) -> "DCMatrix":
        return cls(np.eye(n, dtype=np.complex128))

    @property
    def shape(self):
        return self.std.shape

    def __getitem__(self, index) -> DualComplex:
        return DualComplex(self.std[index], self.dual[index])

    def __matmul__(self, other):
        if isinstance(other, DCVector):
            return dc_matvec(self, other)
        if isinstance(other, DCMatrix):
            return dc_matmul(self, other)
        return NotImplemented

    def conj_transpose(self) -> "DCMatrix":
        return DCMatrix(self.std.conj().T, self.dual.conj().T)

    def allclose(self, other: "DCMatrix", atol: float = 1e-12) -> bool:
        return bool(np.allclose(self.std, other.std, atol=atol, rtol=0) and np.allclose(self.dual, other.dual, atol=atol, rtol=0))

    def __repr__(self) -> str:
        return f"DCMatrix({self.shape[0]}x{self.shape[1]})"


def _check_same_length(x: DCVector, y: DCVector):
    if len(x) != len(y):
        raise DimensionError(f"벡터 길이가 다릅니다: {len(x)} vs {len(y)}")


def dc_matvec(b: DCMatrix, w: DCVector) -> DCVector:
    """표준부 B_s w_s, 이원부 B_s w_d + B_d w_s"""
    if b.shape[1] != len(w):
        raise DimensionError(f"내부 차원이 맞지 않습니다: {b.shape} x {len(w)}")
    return DCVector(b.std @ w.std, b.std @ w.dual + b.dual @ w.std)


def dc_matmul(a: DCMatrix, b: DCMatrix) -> DCMatrix:
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"내부 차원이 맞지 않습니다: {a.shape} x {b.shape}")
    return DCMatrix(a.std @ b.std, a.std @ b.dual + a.dual @ b.std)
