"""
고정 예제 행렬

수렴 가정이 깨지는 세 가지 예, 고윳값이 여럿인 3x3 예, 실험용 스펙트럼.
"""
from typing import List, Tuple

import numpy as np

from dqeig.algebra.dual import DualComplex
from dqeig.algebra.dual_quaternion import DualQuaternion
from dqeig.algebra.quaternion import Quaternion
from dqeig.graphgen.spectrum import leading_spectrum
from dqeig.linalg.matrix import DQMatrix, DQVector


def _quaternion_diag(n: int, q: Quaternion) -> np.ndarray:
    out = np.zeros((n, n, 4))
    out[np.arange(n), np.arange(n)] = q.to_array()
    return out


def fail_iii() -> Tuple[DQMatrix, DQVector]:
    """A_s = A_d = iI₂, v0 = [1+ε, j] (반복 벡터가 4주기로 돈다)"""
    i = Quaternion(0.0, 1.0)
    a = DQMatrix(_quaternion_diag(2, i), _quaternion_diag(2, i))
    v0 = DQVector([[1, 0, 0, 0], [0, 0, 1, 0]], [[1, 0, 0, 0], [0, 0, 0, 0]])
    return a, v0


def fail_iv() -> Tuple[DQMatrix, DQVector]:
    """A_s = I₃, A_d = [[2,0,0],[0,1,1],[0,0,1]], v0 = [1,1,1] (λ = 1 + 5/3 ε 에서 멈춘다)"""
    a = DQMatrix.from_real(np.eye(3), [[2, 0, 0], [0, 1, 1], [0, 0, 1]])
    return a, DQVector.from_real([1.0, 1.0, 1.0])


def fail_v() -> Tuple[DQMatrix, DQVector]:
    """A_s = I₂, A_d = iI₂, v0 = [1, j] (이원부가 선형으로 커진다)"""
    a = DQMatrix(_quaternion_diag(2, Quaternion(1.0)), _quaternion_diag(2, Quaternion(0.0, 1.0)))
    v0 = DQVector([[1, 0, 0, 0], [0, 0, 1, 0]])
    return a, v0


def non_necessity_example(alpha: Quaternion) -> Tuple[DQMatrix, DualQuaternion, DQVector]:
    """
    Â = [[2+ε,1,0],[0,2,0],[0,0,1]] 의 고유쌍 (2 + αε, [1, (α-1)ε, 0])

    α는 임의의 사원수다.
    """
    a = DQMatrix.from_real([[2, 1, 0], [0, 2, 0], [0, 0, 1]], [[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    lam = DualQuaternion(Quaternion(2.0), alpha)
    std = np.zeros((3, 4))
    std[0, 0] = 1.0
    dual = np.zeros((3, 4))
    dual[1] = (alpha - Quaternion(1.0)).to_array()
    return a, lam, DQVector(std, dual)


def infinite_eigenvalue_example(alpha: Quaternion) -> Tuple[DQMatrix, DualQuaternion, DQVector]:
    """
    A_s = [[2,0,0],[0,1,1],[0,0,1]], A_d = I 의 고유쌍 (1 + αε, [0, 1, (α-1)ε])

    α마다 다른 고윳값이 나오므로 고윳값이 무한히 많다.
    """
    a = DQMatrix.from_real([[2, 0, 0], [0, 1, 1], [0, 0, 1]], np.eye(3))
    lam = DualQuaternion(Quaternion(1.0), alpha)
    std = np.zeros((3, 4))
    std[1, 0] = 1.0
    dual = np.zeros((3, 4))
    dual[2] = (alpha - Quaternion(1.0)).to_array()
    return a, lam, DQVector(std, dual)


def size_sweep_spectrum(n: int) -> List[DualComplex]:
    """{1.5+ε, 1+ε, …, 1+ε} (실수 지배 고윳값)"""
    return leading_spectrum(n, DualComplex(1.5, 1.0), DualComplex(1.0, 1.0))


def complex_dominant_spectrum(n: int) -> List[DualComplex]:
    """{2+i+ε, 1+i+ε, …} (지배 고윳값이 복소수라 DCAM-PM이 수렴하지 않는다)"""
    return leading_spectrum(n, DualComplex(2 + 1j, 1.0), DualComplex(1 + 1j, 1.0))
