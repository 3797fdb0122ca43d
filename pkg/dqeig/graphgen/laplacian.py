"""
단위 이원 사원수 방향 그래프(UDQDG)와 라플라시안 L̂ = D - Â
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from dqeig.algebra.dual_quaternion import DQ_ONE, DualQuaternion
from dqeig.errors import InputError
from dqeig.graphgen.sampling import rand_unit_dq
from dqeig.linalg.matrix import DQMatrix

logger = logging.getLogger(__name__)

Arc = Tuple[int, int, DualQuaternion]


@dataclass
class Udqdg:
    """
    단위 이원 사원수 가중치 방향 그래프

    균형 그래프는 정점 게이지 u를 저장하며 모든 호에서 weight(i, j) = u_i* u_j 이다.
    """

    n: int
    arcs: List[Arc] = field(default_factory=list)
    gauges: Optional[List[DualQuaternion]] = None

    @property
    def balanced(self) -> bool:
        return self.gauges is not None

    @property
    def out_degree(self) -> List[int]:
        degree = [0] * self.n
        for i, _, _ in self.arcs:
            degree[i] += 1
        return degree

    def weight(self, i: int, j: int) -> DualQuaternion:
        for a, b, w in self.arcs:
            if a == i and b == j:
                return w
        raise KeyError(f"호 {i}→{j}가 없습니다")

    def cycle_product(self, vertices: Sequence[int]) -> DualQuaternion:
        """닫힌 경로 v₀→v₁→…→v₀ 의 가중치 곱"""
        product = DQ_ONE
        for k, i in enumerate(vertices):
            product = product * self.weight(i, vertices[(k + 1) % len(vertices)])
        return product

    def laplacian(self) -> DQMatrix:
        """대각은 나가는 차수, 비대각은 -가중치"""
        std = np.zeros((self.n, self.n, 4))
        dual = np.zeros((self.n, self.n, 4))
        for i, j, w in self.arcs:
            std[i, j] -= w.s.to_array()
            dual[i, j] -= w.d.to_array()
        std[np.arange(self.n), np.arange(self.n), 0] += self.out_degree
        return DQMatrix(std, dual)

    def underlying_laplacian(self) -> DQMatrix:
        """모든 가중치를 1로 바꾼 실수 라플라시안"""
        lap = np.diag(np.asarray(self.out_degree, dtype=np.float64))
        for i, j, _ in self.arcs:
            lap[i, j] -= 1.0
        return DQMatrix.from_real(lap)

    def gauge_matrix(self) -> DQMatrix:
        """Û = diag(u_i*) (균형 그래프에서 L̂ = Û L Û*)"""
        if self.gauges is None:
            raise InputError("균형 그래프가 아니어서 게이지가 없습니다")
        return DQMatrix.diag([u.conj() for u in self.gauges])


def _gauge_weight(gauges: Sequence[DualQuaternion], i: int, j: int) -> DualQuaternion:
    return gauges[i].conj() * gauges[j]


def cycle_laplacian(n: int, rng: np.random.Generator, balanced: bool = True) -> Tuple[Udqdg, DQMatrix]:
    """
    방향 순환 그래프 0→1→…→n-1→0

    균형인 경우 u₀ = 1 로 두고 앞의 n-1개 가중치를 뽑아 게이지를 누적하며,
    닫는 가중치는 u_{n-1}* 이 된다.

    Args:
        n: 정점 수 (3 이상)
        rng: 난수 생성기
        balanced: 균형 그래프 여부

    Returns:
        (그래프, 라플라시안)
    """
    if n < 3:
        raise InputError(f"순환 그래프는 n ≥ 3 이어야 합니다: {n}")

    if balanced:
        gauges = [DQ_ONE]
        for _ in range(n - 1):
            gauges.append(gauges[-1] * rand_unit_dq(rng))
        arcs = [(i, (i + 1) % n, _gauge_weight(gauges, i, (i + 1) % n)) for i in range(n)]
        graph = Udqdg(n=n, arcs=arcs, gauges=gauges)
    else:
        arcs = [(i, (i + 1) % n, rand_unit_dq(rng)) for i in range(n)]
        graph = Udqdg(n=n, arcs=arcs)

    logger.debug(f"순환 라플라시안 생성: n={n}, balanced={balanced}")
    return graph, graph.laplacian()


def wheel_laplacian(n: int, rng: np.random.Generator, balanced: bool = True) -> Tuple[Udqdg, DQMatrix]:
    """
    바퀴 그래프: 정점 0..n-2의 방향 순환과 중심(마지막 정점)에서 모든 순환 정점으로 가는 호

    균형인 경우 모든 정점에 무작위 단위 게이지를 주고 weight(i, j) = u_i* u_j 로 둔다.

    Args:
        n: 정점 수 (4 이상)
        rng: 난수 생성기
        balanced: 균형 그래프 여부

    Returns:
        (그래프, 라플라시안)
    """
    if n < 4:
        raise InputError(f"바퀴 그래프는 n ≥ 4 이어야 합니다: {n}")

    rim = n - 1
    center = n - 1
    pairs = [(i, (i + 1) % rim) for i in range(rim)] + [(center, j) for j in range(rim)]

    if balanced:
        gauges = [rand_unit_dq(rng) for _ in range(n)]
        arcs = [(i, j, _gauge_weight(gauges, i, j)) for i, j in pairs]
        graph = Udqdg(n=n, arcs=arcs, gauges=gauges)
    else:
        arcs = [(i, j, rand_unit_dq(rng)) for i, j in pairs]
        graph = Udqdg(n=n, arcs=arcs)

    logger.debug(f"바퀴 라플라시안 생성: n={n}, balanced={balanced}")
    return graph, graph.laplacian()
