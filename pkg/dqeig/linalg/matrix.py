"""
이원 사원수 벡터와 행렬

표준부와 이원부를 각각 (n, 4) / (m, n, 4) float64 배열로 저장한다.
스칼라 곱은 항상 오른쪽(x α̂, v̂ λ̂)에만 적용한다.
"""
import math
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Union

import numpy as np

from dqeig.algebra.dual import DualNumber
from dqeig.algebra.dual_quaternion import DualQuaternion
from dqeig.algebra.qarray import (
    as_qarray,
    complex_pair_matmul,
    frobenius,
    from_complex_pair,
    inner_real,
    qconj,
    qmul,
    to_complex_pair,
)
from dqeig.algebra.quaternion import Quaternion
from dqeig.config import APPRECIABLE_TOL
from dqeig.errors import BreakdownError, DimensionError


class DQVector:
    """이원 사원수 벡터 x̂ = x_s + x_d ε"""

    __slots__ = ("std", "dual")

    def __init__(self, std, dual=None):
        self.std = as_qarray(std, 1)
        self.dual = np.zeros_like(self.std) if dual is None else as_qarray(dual, 1)
        if self.std.shape != self.dual.shape:
            raise DimensionError(f"표준부와 이원부 길이가 다릅니다: {self.std.shape} vs {self.dual.shape}")

    @classmethod
    def from_entries(cls, entries: Iterable[DualQuaternion]) -> "DQVector":
        entries = list(entries)
        std = np.array([e.s.to_array() for e in entries], dtype=np.float64).reshape(-1, 4)
        dual = np.array([e.d.to_array() for e in entries], dtype=np.float64).reshape(-1, 4)
        return cls(std, dual)

    @classmethod
    def from_real(cls, std_values: Sequence[float], dual_values: Optional[Sequence[float]] = None) -> "DQVector":
        """실수 성분만 갖는 벡터"""
        n = len(std_values)
        std = np.zeros((n, 4))
        std[:, 0] = std_values
        dual = np.zeros((n, 4))
        if dual_values is not None:
            dual[:, 0] = dual_values
        return cls(std, dual)

    @classmethod
    def zeros(cls, n: int) -> "DQVector":
        return cls(np.zeros((n, 4)))

    def __len__(self) -> int:
        return self.std.shape[0]

    def __getitem__(self, index: int) -> DualQuaternion:
        return DualQuaternion(Quaternion.from_array(self.std[index]), Quaternion.from_array(self.dual[index]))

    def entries(self) -> List[DualQuaternion]:
        return [self[i] for i in range(len(self))]

    def copy(self) -> "DQVector":
        return DQVector(self.std.copy(), self.dual.copy())

    def __add__(self, other: "DQVector") -> "DQVector":
        _check_same_length(self, other)
        return DQVector(self.std + other.std, self.dual + other.dual)

    def __sub__(self, other: "DQVector") -> "DQVector":
        _check_same_length(self, other)
        return DQVector(self.std - other.std, self.dual - other.dual)

    def __neg__(self) -> "DQVector":
        return DQVector(-self.std, -self.dual)

    def scale(self, factor: float) -> "DQVector":
        return DQVector(self.std * factor, self.dual * factor)

    def right_mul(self, alpha: Union[DualQuaternion, Quaternion]) -> "DQVector":
        """x α̂ (오른쪽 스칼라 곱)"""
        if isinstance(alpha, Quaternion):
            alpha = DualQuaternion(alpha)
        a_s = alpha.s.to_array()
        a_d = alpha.d.to_array()
        return DQVector(qmul(self.std, a_s), qmul(self.std, a_d) + qmul(self.dual, a_s))

    def conj_dot(self, other: "DQVector") -> DualQuaternion:
        """x̂* ŷ = Σ conj(x_i) y_i"""
        _check_same_length(self, other)
        cs = qconj(self.std)
        std = qmul(cs, other.std).sum(axis=0)
        dual = (qmul(cs, other.dual) + qmul(qconj(self.dual), other.std)).sum(axis=0)
        return DualQuaternion.from_arrays(std, dual)

    def std_norm(self) -> float:
        return frobenius(self.std)

    def norm2(self, tol: float = APPRECIABLE_TOL) -> DualNumber:
        return dqv_norm2(self, tol)

    def norm2R(self) -> float:
        return dqv_norm2R(self)

    def normalize(self, tol: float = APPRECIABLE_TOL) -> "DQVector":
        return dqv_normalize(self, tol)

    def allclose(self, other: "DQVector", atol: float = 1e-12) -> bool:
        return bool(np.allclose(self.std, other.std, atol=atol, rtol=0) and np.allclose(self.dual, other.dual, atol=atol, rtol=0))

    def __repr__(self) -> str:
        return f"DQVector(n={len(self)})"


class DQMatrix:
    """
    이원 사원수 행렬 Â = A_s + A_d ε (행 우선 조밀 저장)

    생성 후 std / dual 배열은 읽기 전용이다 (곱셈용 복소 분해를 캐시한다).
    """

    def __init__(self, std, dual=None):
        self.std = _read_only(as_qarray(std, 2))
        self.dual = _read_only(np.zeros_like(self.std) if dual is None else as_qarray(dual, 2))
        if self.std.shape != self.dual.shape:
            raise DimensionError(f"표준부와 이원부 모양이 다릅니다: {self.std.shape} vs {self.dual.shape}")

    @classmethod
    def identity(cls, n: int) -> "DQMatrix":
        std = np.zeros((n, n, 4))
        std[np.arange(n), np.arange(n), 0] = 1.0
        return cls(std)

    @classmethod
    def zeros(cls, m: int, n: Optional[int] = None) -> "DQMatrix":
        return cls(np.zeros((m, m if n is None else n, 4)))

    @classmethod
    def from_real(cls, std_values, dual_values=None) -> "DQMatrix":
        """실수 행렬(들)에서 생성"""
        std_values = np.asarray(std_values, dtype=np.float64)
        std = np.zeros(std_values.shape + (4,))
        std[..., 0] = std_values
        dual = np.zeros_like(std)
        if dual_values is not None:
            dual[..., 0] = np.asarray(dual_values, dtype=np.float64)
        return cls(std, dual)

    @classmethod
    def from_entries(cls, rows: Sequence[Sequence[DualQuaternion]]) -> "DQMatrix":
        std = np.array([[e.s.to_array() for e in row] for row in rows], dtype=np.float64)
        dual = np.array([[e.d.to_array() for e in row] for row in rows], dtype=np.float64)
        return cls(std, dual)

    @classmethod
    def diag(cls, entries: Sequence[DualQuaternion]) -> "DQMatrix":
        n = len(entries)
        std = np.zeros((n, n, 4))
        dual = np.zeros((n, n, 4))
        for i, e in enumerate(entries):
            std[i, i] = e.s.to_array()
            dual[i, i] = e.d.to_array()
        return cls(std, dual)

    @classmethod
    def block_diag(cls, blocks: Sequence["DQMatrix"]) -> "DQMatrix":
        """정사각 블록들의 블록 대각 행렬"""
        n = sum(b.n_rows for b in blocks)
        std = np.zeros((n, n, 4))
        dual = np.zeros((n, n, 4))
        offset = 0
        for b in blocks:
            k = b.n_rows
            std[offset:offset + k, offset:offset + k] = b.std
            dual[offset:offset + k, offset:offset + k] = b.dual
            offset += k
        return cls(std, dual)

    @property
    def shape(self):
        return self.std.shape[:2]

    @property
    def n_rows(self) -> int:
        return self.std.shape[0]

    @property
    def n_cols(self) -> int:
        return self.std.shape[1]

    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    @cached_property
    def _std_pair(self):
        return to_complex_pair(self.std)

    @cached_property
    def _dual_pair(self):
        return to_complex_pair(self.dual)

    def __getitem__(self, index) -> DualQuaternion:
        i, j = index
        return DualQuaternion(Quaternion.from_array(self.std[i, j]), Quaternion.from_array(self.dual[i, j]))

    def copy(self) -> "DQMatrix":
        return DQMatrix(self.std.copy(), self.dual.copy())

    def __add__(self, other: "DQMatrix") -> "DQMatrix":
        _check_same_shape(self, other)
        return DQMatrix(self.std + other.std, self.dual + other.dual)

    def __sub__(self, other: "DQMatrix") -> "DQMatrix":
        _check_same_shape(self, other)
        return DQMatrix(self.std - other.std, self.dual - other.dual)

    def __neg__(self) -> "DQMatrix":
        return DQMatrix(-self.std, -self.dual)

    def scale(self, factor: float) -> "DQMatrix":
        return DQMatrix(self.std * factor, self.dual * factor)

    def __matmul__(self, other):
        return dqm_mul(self, other)

    def conj_transpose(self) -> "DQMatrix":
        return dqm_conj_transpose(self)

    @property
    def H(self) -> "DQMatrix":
        return dqm_conj_transpose(self)

    def normF(self, tol: float = APPRECIABLE_TOL) -> DualNumber:
        return dqm_normF(self, tol)

    def normFR(self) -> float:
        return dqm_normFR(self)

    def allclose(self, other: "DQMatrix", atol: float = 1e-12) -> bool:
        return bool(np.allclose(self.std, other.std, atol=atol, rtol=0) and np.allclose(self.dual, other.dual, atol=atol, rtol=0))

    def __repr__(self) -> str:
        return f"DQMatrix({self.n_rows}x{self.n_cols})"


def _read_only(arr: np.ndarray) -> np.ndarray:
    out = np.array(arr, dtype=np.float64, copy=True)
    out.flags.writeable = False
    return out


def _check_same_length(x: DQVector, y: DQVector):
    if len(x) != len(y):
        raise DimensionError(f"벡터 길이가 다릅니다: {len(x)} vs {len(y)}")


def _check_same_shape(a: DQMatrix, b: DQMatrix):
    if a.shape != b.shape:
        raise DimensionError(f"행렬 모양이 다릅니다: {a.shape} vs {b.shape}")


def dqm_mul(a: DQMatrix, b: Union[DQMatrix, DQVector]) -> Union[DQMatrix, DQVector]:
    """
    이원 사원수 행렬 곱

    표준부 A_s B_s, 이원부 A_s B_d + A_d B_s

    Args:
        a: 왼쪽 행렬
        b: 오른쪽 행렬 또는 벡터

    Returns:
        곱 (b와 같은 종류)
    """
    inner = b.n_rows if isinstance(b, DQMatrix) else len(b)
    if a.n_cols != inner:
        raise DimensionError(f"내부 차원이 맞지 않습니다: {a.shape} x {inner}")
    s1, s2 = a._std_pair
    d1, d2 = a._dual_pair
    if isinstance(b, DQMatrix):
        bs1, bs2 = b._std_pair
        bd1, bd2 = b._dual_pair
    else:
        bs1, bs2 = to_complex_pair(b.std)
        bd1, bd2 = to_complex_pair(b.dual)
    std = complex_pair_matmul(s1, s2, bs1, bs2)
    ds = complex_pair_matmul(s1, s2, bd1, bd2)
    sd = complex_pair_matmul(d1, d2, bs1, bs2)
    out_std = from_complex_pair(*std)
    out_dual = from_complex_pair(ds[0] + sd[0], ds[1] + sd[1])
    if isinstance(b, DQMatrix):
        return DQMatrix(out_std, out_dual)
    return DQVector(out_std, out_dual)


def dqm_conj_transpose(a: DQMatrix) -> DQMatrix:
    """(Â*)_ij = conj(Â_ji)"""
    return DQMatrix(qconj(a.std.transpose(1, 0, 2)), qconj(a.dual.transpose(1, 0, 2)))


def dqv_norm2(x: DQVector, tol: float = APPRECIABLE_TOL) -> DualNumber:
    """
    벡터 2-노름 (이원수)

    x_s ≠ 0 이면 ‖x_s‖ + (x_s* x_d + x_d* x_s)/(2‖x_s‖) ε, 아니면 ‖x_d‖ ε
    """
    ns = frobenius(x.std)
    if ns > tol:
        return DualNumber(ns, inner_real(x.std, x.dual) / ns)
    return DualNumber(0.0, frobenius(x.dual))


def dqv_norm2R(x: DQVector) -> float:
    """√(‖x_s‖² + ‖x_d‖²)"""
    return math.hypot(frobenius(x.std), frobenius(x.dual))


def dqm_normF(a: DQMatrix, tol: float = APPRECIABLE_TOL) -> DualNumber:
    """
    행렬 F-노름 (이원수)

    이원부 분모는 2‖A_s‖_F 를 쓴다 (벡터 2-노름과 같은 형태).
    """
    ns = frobenius(a.std)
    if ns > tol:
        return DualNumber(ns, inner_real(a.std, a.dual) / ns)
    return DualNumber(0.0, frobenius(a.dual))


def dqm_normFR(a: DQMatrix) -> float:
    """√(‖A_s‖_F² + ‖A_d‖_F²)"""
    return math.hypot(frobenius(a.std), frobenius(a.dual))


def dqv_normalize(x: DQVector, tol: float = APPRECIABLE_TOL) -> DQVector:
    """
    벡터를 이원수 ‖x‖₂ 로 나누기

    ‖x‖₂ = a_s + a_d ε 일 때 x_s/a_s + (x_d/a_s - x_s a_d/a_s²) ε

    Args:
        x: 벡터
        tol: 표준부 노름 임계값

    Returns:
        정규화된 벡터
    """
    norm = dqv_norm2(x, tol)
    if norm.s <= tol:
        raise BreakdownError(f"표준부 노름이 너무 작아 정규화할 수 없습니다: {norm.s:.3e}")
    a_s, a_d = norm.s, norm.d
    return DQVector(x.std / a_s, x.dual / a_s - x.std * (a_d / (a_s * a_s)))


def residual_2R(a: DQMatrix, v: DQVector, lam: DualQuaternion) -> float:
    """‖Âv̂ - v̂λ̂‖_{2^R}"""
    return dqv_norm2R(dqm_mul(a, v) - v.right_mul(lam))
