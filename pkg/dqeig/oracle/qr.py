"""
조밀 복소 고윳값 풀이 (균형화 → 하우스홀더 헤센베르크 → 윌킨슨 이동 QR)
"""
import logging

import numpy as np

from dqeig.errors import ConvergenceError, DimensionError

logger = logging.getLogger(__name__)

RADIX = 2.0
SWEEPS_PER_ROW = 30
EXCEPTIONAL_SHIFT_EVERY = 10
EXCEPTIONAL_SHIFT_FACTOR = 0.75


def balance(a: np.ndarray) -> np.ndarray:
    """
    행/열 1-노름을 2의 거듭제곱 대각 닮음 변환으로 맞춘다 (고윳값 불변)

    Args:
        a: 정사각 복소 행렬

    Returns:
        균형화된 사본
    """
    a = np.array(a, dtype=np.complex128)
    n = a.shape[0]
    done = False
    while not done:
        done = True
        for i in range(n):
            col = np.sum(np.abs(a[:, i])) - abs(a[i, i])
            row = np.sum(np.abs(a[i, :])) - abs(a[i, i])
            if col == 0.0 or row == 0.0:
                continue
            total = col + row
            f = 1.0
            g = row / RADIX
            while col < g:
                f *= RADIX
                col *= RADIX * RADIX
            g = row * RADIX
            while col > g:
                f /= RADIX
                col /= RADIX * RADIX
            if (col + row) / f < 0.95 * total:
                done = False
                a[i, :] /= f
                a[:, i] *= f
    return a


def hessenberg(a: np.ndarray) -> np.ndarray:
    """하우스홀더 반사로 위 헤센베르크 형태로 변환 (닮음 변환)"""
    h = np.array(a, dtype=np.complex128)
    n = h.shape[0]
    for k in range(n - 2):
        x = h[k + 1:, k]
        alpha = np.linalg.norm(x)
        if alpha == 0.0:
            continue
        phase = x[0] / abs(x[0]) if x[0] != 0 else 1.0
        v = x.copy()
        v[0] += phase * alpha
        v /= np.linalg.norm(v)
        h[k + 1:, k:] -= 2.0 * np.outer(v, v.conj() @ h[k + 1:, k:])
        h[:, k + 1:] -= 2.0 * np.outer(h[:, k + 1:] @ v, v.conj())
        h[k + 2:, k] = 0.0
    return h


def _wilkinson_shift(w: np.ndarray) -> complex:
    """끝 2x2 블록의 고윳값 중 오른쪽 아래 원소에 가까운 것"""
    a, b = w[-2, -2], w[-2, -1]
    c, d = w[-1, -2], w[-1, -1]
    half = (a - d) / 2.0
    disc = np.sqrt(half * half + b * c)
    mu1 = (a + d) / 2.0 + disc
    mu2 = (a + d) / 2.0 - disc
    return mu1 if abs(mu1 - d) <= abs(mu2 - d) else mu2


def _qr_sweep(w: np.ndarray, mu: complex):
    """활성 창 w에서 이동 QR 한 단계: w - μI = QR, w ← RQ + μI (제자리 갱신)"""
    m = w.shape[0]
    w[np.arange(m), np.arange(m)] -= mu
    rotations = []
    for k in range(m - 1):
        a, b = w[k, k], w[k + 1, k]
        r = np.hypot(abs(a), abs(b))
        if r == 0.0:
            c, s = 1.0 + 0j, 0j
        else:
            c, s = a / r, b / r
        g = np.array([[np.conj(c), np.conj(s)], [-s, c]])
        w[k:k + 2, k:] = g @ w[k:k + 2, k:]
        rotations.append(g)
    for k, g in enumerate(rotations):
        w[:k + 2, k:k + 2] = w[:k + 2, k:k + 2] @ g.conj().T
    w[np.arange(m), np.arange(m)] += mu


def _hessenberg_qr(h: np.ndarray) -> np.ndarray:
    n = h.shape[0]
    eigs = np.zeros(n, dtype=np.complex128)
    eps = np.finfo(np.float64).eps
    scale = max(np.linalg.norm(h), np.finfo(np.float64).tiny)
    limit = SWEEPS_PER_ROW * n
    sweeps = 0
    its = 0
    hi = n - 1

    while hi >= 0:
        lo = hi
        while lo > 0:
            near = abs(h[lo - 1, lo - 1]) + abs(h[lo, lo])
            if abs(h[lo, lo - 1]) <= eps * (near if near > 0.0 else scale):
                h[lo, lo - 1] = 0.0
                break
            lo -= 1

        if lo == hi:
            eigs[hi] = h[hi, hi]
            hi -= 1
            its = 0
            continue

        sweeps += 1
        its += 1
        if sweeps > limit:
            raise ConvergenceError(f"QR 반복이 {limit}회 안에 수렴하지 않았습니다 (남은 창 {lo}..{hi})")

        w = h[lo:hi + 1, lo:hi + 1]
        if its % EXCEPTIONAL_SHIFT_EVERY == 0:
            mu = w[-1, -1] + EXCEPTIONAL_SHIFT_FACTOR * abs(w[-1, -2])
            logger.debug(f"예외 이동 사용: 창 {lo}..{hi}")
        else:
            mu = _wilkinson_shift(w)
        _qr_sweep(w, mu)

    logger.debug(f"QR 완료: n={n}, 총 {sweeps}회")
    return eigs


def complex_eigs(m: np.ndarray, method: str = "qr") -> np.ndarray:
    """
    복소 정사각 행렬의 모든 고윳값

    Args:
        m: 정사각 복소 행렬
        method: "qr" (자체 구현) 또는 "lapack" (numpy 교차 검증용)

    Returns:
        고윳값 배열
    """
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"정사각 행렬이 아닙니다: {m.shape}")
    if m.shape[0] == 0:
        return np.zeros(0, dtype=np.complex128)
    if method == "lapack":
        return np.linalg.eigvals(m)
    if method != "qr":
        raise ValueError(f"알 수 없는 방법입니다: {method}")
    return _hessenberg_qr(hessenberg(balance(m)))
