"""Seeded G(n, p) sampling and closed-form parity probabilities.

Every edge decision for a graph is drawn from one numpy ``Generator`` keyed
by a 64-bit seed, consuming one uniform per vertex pair in lexicographic
order ``(0,1), (0,2), ..., (n-2,n-1)``. Monte Carlo trials get their own
seed via :func:`derive_seed`, so trial ``i`` is reproducible on its own.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph

MASK64 = (1 << 64) - 1
DEFAULT_SEED = 20240601


@dataclass(frozen=True)
class ProbabilityWindow:
    n: int
    p: float
    strong_ok: bool
    weak_ok: bool
    strong_lower: float
    strong_upper: float
    weak_lower: float
    weak_upper: float
    log_base: str = "e"

    @property
    def lower_threshold(self) -> float:
        return self.strong_lower

    @property
    def upper_threshold(self) -> float:
        return self.strong_upper

    @property
    def strong_window_empty(self) -> bool:
        return self.strong_lower > self.strong_upper


def parse_seed(text: str | int) -> int:
    """Accept decimal or ``0x`` hex; the result must fit in 64 bits unsigned."""
    value = text if isinstance(text, int) else int(str(text).strip(), 0)
    if not 0 <= value <= MASK64:
        raise ValueError(f"seed {text!r} is not a 64-bit unsigned integer")
    return value


def derive_seed(master: int, index: int) -> int:
    """Per-trial seed: splitmix64 finalizer over (master, index)."""
    z = (parse_seed(master) + (index + 1) * 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def _check_p(p: float) -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0 or math.isnan(p):
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    return p


def sample_adjacency(n: int, p: float, seed: int) -> np.ndarray:
    """Boolean adjacency matrix of G(n, p); the draw behind :func:`sample_gnp`."""
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    p = _check_p(p)
    rng = np.random.Generator(np.random.PCG64(parse_seed(seed)))
    iu, ju = np.triu_indices(n, 1)
    present = rng.random(iu.size) < p
    a = np.zeros((n, n), dtype=bool)
    a[iu[present], ju[present]] = True
    a |= a.T
    return a


def vertex_parities(n: int, p: float, seed: int, b: int) -> np.ndarray:
    """Degree parities of vertices ``0..b-1`` of ``sample_gnp(n, p, seed)``.

    Every pair touching a vertex below ``b`` sits in the first ``b`` rows of
    the lexicographic order, so only that prefix of the stream is drawn.
    """
    if not 0 <= b <= n:
        raise ValueError(f"need 0 <= b <= n, got b={b}, n={n}")
    p = _check_p(p)
    rng = np.random.Generator(np.random.PCG64(parse_seed(seed)))
    prefix = b * (n - 1) - b * (b - 1) // 2
    present = rng.random(prefix) < p
    parity = np.zeros(b, dtype=np.int64)
    start = 0
    for u in range(b):
        row = present[start:start + n - 1 - u]
        start += n - 1 - u
        parity[u] += row.sum()
        # row entry j pairs u with u + 1 + j
        upto = min(b, n) - u - 1
        if upto > 0:
            parity[u + 1:u + 1 + upto] += row[:upto]
    return parity % 2


def sample_gnp(n: int, p: float, seed: int) -> Graph:
    a = sample_adjacency(n, p, seed)
    return Graph._trusted([np.flatnonzero(row).tolist() for row in a])


def classify_p(n: int, p: float) -> ProbabilityWindow:
    """Check ``p`` against the strong window (ln n)^2/sqrt(n) and the weak one (ln n)^2/n."""
    if n < 2:
        raise ValueError(f"classify_p needs n >= 2, got {n}")
    p = _check_p(p)
    log2n = math.log(n) ** 2
    s = log2n / math.sqrt(n)
    w = log2n / n
    return ProbabilityWindow(
        n=n,
        p=p,
        strong_ok=s <= p <= 1 - s,
        weak_ok=w <= p <= 1 - w,
        strong_lower=s,
        strong_upper=1 - s,
        weak_lower=w,
        weak_upper=1 - w,
    )


def epsilon_b(n: int, p: float, b: int) -> float:
    """Half of ``(1 - 2p)^(n - b)``, sign kept."""
    if not 1 <= b <= n:
        raise ValueError(f"need 1 <= b <= n, got b={b}, n={n}")
    p = _check_p(p)
    return 0.5 * (1.0 - 2.0 * p) ** (n - b)


def odd_degree_prob(n: int, p: float) -> float:
    """P(a fixed vertex of G(n, p) has odd degree) = 1/2 - epsilon_b(n, p, 1)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return 0.5 - epsilon_b(n, p, 1)
