"""Exact ground truth for small graphs.

Graphs on ``n`` vertices are encoded as integer masks over the ``C(n, 2)``
vertex pairs in lexicographic order: bit ``k`` is set when the ``k``-th pair
of ``itertools.combinations(range(n), 2)`` is an edge.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .editors import EditOp, EditPlan, Mode, parity_lower_bound
from .graph import Graph, is_eulerian

MAX_ENUM_N = 6
MAX_CLIQUE_N = 64


@dataclass
class OracleResult:
    """``value`` is None when no Eulerian graph was found.

    ``status`` separates a proof of infeasibility (``"infeasible"``, the whole
    reachable space was searched) from running out of depth (``"budget"``).
    """

    value: int | None
    witness: EditPlan | None
    explored: int
    status: str

    @property
    def feasible(self) -> bool:
        return self.value is not None


@lru_cache(maxsize=None)
def pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(itertools.combinations(range(n), 2))


def to_mask(g: Graph) -> int:
    index = {e: k for k, e in enumerate(pairs(g.n))}
    mask = 0
    for e in g.edges():
        mask |= 1 << index[e]
    return mask


def from_mask(n: int, mask: int) -> Graph:
    return Graph(n, [e for k, e in enumerate(pairs(n)) if mask >> k & 1])


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """All ``2^C(n,2)`` labelled graphs on ``n`` vertices, in mask order."""
    if n < 0 or n > MAX_ENUM_N:
        raise ValueError(f"enumeration is limited to 0 <= n <= {MAX_ENUM_N}, got {n}")
    for mask in range(1 << len(pairs(n))):
        yield from_mask(n, mask)


@lru_cache(maxsize=None)
def _eulerian_table(n: int) -> bytes:
    return bytes(is_eulerian(from_mask(n, mask)) for mask in range(1 << len(pairs(n))))


def _eulerian_predicate(n: int):
    if n <= MAX_ENUM_N:
        table = _eulerian_table(n)
        return table.__getitem__
    memo: dict[int, bool] = {}

    def check(mask):
        if mask not in memo:
            memo[mask] = is_eulerian(from_mask(n, mask))
        return memo[mask]

    return check


def _allowed_bits(mode: Mode, start: int, width: int) -> list[int]:
    if mode is Mode.EDIT:
        return list(range(width))
    if mode is Mode.EXTEND:
        return [k for k in range(width) if not start >> k & 1]
    return [k for k in range(width) if start >> k & 1]


def _witness(g: Graph, mode: Mode, bits: list[int]) -> EditPlan:
    ops = []
    for k in bits:
        u, v = pairs(g.n)[k]
        ops.append(EditOp.remove(u, v) if g.has_edge(u, v) else EditOp.add(u, v))
    return EditPlan(mode, ops=ops, lower_bound=parity_lower_bound(g), strategy="exact")


def exact_edit_number(g: Graph, mode: Mode | str, budget: int | None = None) -> OracleResult:
    """Breadth-first search over edge sets for the fewest toggles reaching an Eulerian graph.

    Extend only adds absent edges and reduce only removes present ones, so
    their state spaces are the supersets / subsets of ``g``.
    """
    mode = Mode(mode)
    width = len(pairs(g.n))
    if budget is None:
        budget = width
    if budget < 0:
        raise ValueError("budget must be non-negative")
    eul = _eulerian_predicate(g.n)
    start = to_mask(g)
    allowed = _allowed_bits(mode, start, width)
    parent: dict[int, tuple[int, int] | None] = {start: None}
    frontier = [start]
    depth = 0
    while frontier:
        for s in frontier:
            if eul(s):
                bits = []
                while parent[s] is not None:
                    s, k = parent[s]
                    bits.append(k)
                return OracleResult(depth, _witness(g, mode, bits[::-1]), len(parent), "found")
        if depth == budget:
            return OracleResult(None, None, len(parent), "budget")
        nxt = []
        for s in frontier:
            for k in allowed:
                bit = 1 << k
                if mode is Mode.EXTEND and s & bit or mode is Mode.REDUCE and not s & bit:
                    continue
                t = s ^ bit
                if t not in parent:
                    parent[t] = (s, k)
                    nxt.append(t)
        frontier = nxt
        depth += 1
    return OracleResult(None, None, len(parent), "infeasible")


def exact_edit_number_iddfs(g: Graph, mode: Mode | str, budget: int | None = None) -> int | None:
    """Independent cross-check: iterative deepening over sets of distinct toggles.

    Toggles commute and a repeated toggle cancels, so depth ``d`` only needs
    the ``d``-subsets of the allowed pairs.
    """
    mode = Mode(mode)
    width = len(pairs(g.n))
    start = to_mask(g)
    allowed = _allowed_bits(mode, start, width)
    limit = len(allowed) if budget is None else min(budget, len(allowed))
    eul = _eulerian_predicate(g.n)
    for d in range(limit + 1):
        for combo in itertools.combinations(allowed, d):
            mask = start
            for k in combo:
                mask ^= 1 << k
            if eul(mask):
                return d
    return None


def max_clique_exact(g: Graph) -> int:
    """Clique number by branch and bound with a greedy-colouring bound."""
    n = g.n
    if n == 0:
        return 0
    if n > MAX_CLIQUE_N:
        raise ValueError(f"exact clique search is limited to n <= {MAX_CLIQUE_N}, got {n}")
    nbr = [sum(1 << w for w in g.neighbors(v)) for v in range(n)]
    best = 1

    def colour_order(cand):
        order, bounds = [], []
        uncoloured = cand
        colour = 0
        while uncoloured:
            colour += 1
            q = uncoloured
            while q:
                low = q & -q
                v = low.bit_length() - 1
                q &= ~nbr[v] & ~low
                uncoloured &= ~low
                order.append(v)
                bounds.append(colour)
        return order, bounds

    def expand(size, cand):
        nonlocal best
        order, bounds = colour_order(cand)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best:
                return
            v = order[i]
            sub = cand & nbr[v]
            if sub:
                expand(size + 1, sub)
            elif size + 1 > best:
                best = size + 1
            cand &= ~(1 << v)

    expand(0, (1 << n) - 1)
    return best


def exact_parity_stats(n: int, p: float, b: int) -> dict[str, float]:
    """Exact P(vertices 0..b-1 all odd) and the product of the marginals, over all graphs."""
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"need 1 <= n <= {MAX_ENUM_N}, got {n}")
    if not 1 <= b <= n:
        raise ValueError(f"need 1 <= b <= n, got b={b}, n={n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    width = len(pairs(n))
    masks = np.arange(1 << width, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(width)) & 1
    m = bits.sum(axis=1)
    weight = p ** m * (1.0 - p) ** (width - m)
    parity = np.zeros((masks.size, n), dtype=np.int64)
    for k, (u, v) in enumerate(pairs(n)):
        parity[:, u] ^= bits[:, k]
        parity[:, v] ^= bits[:, k]
    odd = parity[:, :b].astype(bool)
    joint = float(weight[odd.all(axis=1)].sum())
    marginals = [float(weight[odd[:, i]].sum()) for i in range(b)]
    product = float(np.prod(marginals))
    return {"joint": joint, "product": product, "deviation": abs(joint - product)}
