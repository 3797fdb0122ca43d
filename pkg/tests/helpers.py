import numpy as np

from dqeig.algebra.dual_quaternion import DualQuaternion
from dqeig.linalg.matrix import DQMatrix, DQVector


def random_dq(rng: np.random.Generator) -> DualQuaternion:
    return DualQuaternion.from_arrays(rng.standard_normal(4), rng.standard_normal(4))


def random_matrix(rng: np.random.Generator, m: int, n: int = None) -> DQMatrix:
    n = m if n is None else n
    return DQMatrix(rng.standard_normal((m, n, 4)), rng.standard_normal((m, n, 4)))


def random_vector(rng: np.random.Generator, n: int) -> DQVector:
    return DQVector(rng.standard_normal((n, 4)), rng.standard_normal((n, 4)))


def dq_close(p: DualQuaternion, q: DualQuaternion, atol: float = 1e-12) -> bool:
    return p.distance(q) <= atol
