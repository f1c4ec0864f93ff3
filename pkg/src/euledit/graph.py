"""Simple undirected graphs on vertices ``0..n-1`` and Eulerian queries."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotEulerian

__all__ = [
    "Graph",
    "EulerCircuit",
    "degree_sequence",
    "odd_vertices",
    "is_connected",
    "components",
    "complement",
    "common_neighbors",
    "eulerian_failure",
    "is_eulerian",
    "euler_circuit",
    "check_circuit",
]


class Graph:
    """Immutable simple graph.

    Vertices are the integers ``0..n-1``. Edges are unordered pairs, reported
    as ``(u, v)`` tuples with ``u < v``.

    >>> g = Graph(3, [(0, 1), (2, 1)])
    >>> g.m, g.edges()
    (2, [(0, 1), (1, 2)])
    """

    __slots__ = ("_n", "_adj", "_m", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if v in adj[u]:
                raise ValueError(f"duplicate edge ({min(u, v)}, {max(u, v)})")
            adj[u].add(v)
            adj[v].add(u)
            m += 1
        self._n = n
        self._adj = tuple(frozenset(s) for s in adj)
        self._m = m
        self._edges = None

    @classmethod
    def _trusted(cls, adj: Sequence[Iterable[int]]) -> "Graph":
        # caller guarantees symmetry, no loops, no duplicates
        g = cls.__new__(cls)
        g._n = len(adj)
        g._adj = tuple(frozenset(s) for s in adj)
        g._m = sum(len(s) for s in g._adj) // 2
        g._edges = None
        return g

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls._trusted([set(range(n)) - {v} for v in range(n)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges, sorted lexicographically."""
        if self._edges is None:
            self._edges = tuple(
                (u, v) for u in range(self._n) for v in sorted(self._adj[u]) if u < v
            )
        return list(self._edges)

    def adjacency(self) -> list[set[int]]:
        """A fresh mutable copy of the neighbor sets."""
        return [set(s) for s in self._adj]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self):
        return hash((self._n, self._adj))

    def __repr__(self):
        if self._m <= 12:
            return f"Graph(n={self._n}, edges={self.edges()})"
        return f"Graph(n={self._n}, m={self._m})"


@dataclass(frozen=True)
class EulerCircuit:
    """Closed walk ``walk[0], walk[1], ..., walk[-1], walk[0]``."""

    walk: tuple[int, ...]

    def __len__(self):
        return len(self.walk)

    def edges(self) -> list[tuple[int, int]]:
        t = len(self.walk)
        return [
            (min(self.walk[i], self.walk[(i + 1) % t]), max(self.walk[i], self.walk[(i + 1) % t]))
            for i in range(t)
        ]


def degree_sequence(g: Graph) -> list[int]:
    return [g.degree(v) for v in range(g.n)]


def odd_vertices(g: Graph) -> list[int]:
    """Odd-degree vertices in ascending order."""
    return [v for v in range(g.n) if g.degree(v) % 2]


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def complement(g: Graph) -> Graph:
    everyone = set(range(g.n))
    return Graph._trusted([everyone - g.neighbors(v) - {v} for v in range(g.n)])


def common_neighbors(g: Graph, u: int, v: int) -> list[int]:
    """Vertices adjacent to both ``u`` and ``v``, ascending."""
    for x in (u, v):
        if not 0 <= x < g.n:
            raise ValueError(f"vertex {x} out of range for n={g.n}")
    if u == v:
        raise ValueError("common_neighbors needs two distinct vertices")
    a, b = g.neighbors(u), g.neighbors(v)
    if len(a) > len(b):
        a, b = b, a
    return sorted(w for w in a if w in b)


def eulerian_failure(g: Graph) -> str | None:
    """Name the first Eulerian condition ``g`` violates, or ``None``.

    Conditions are checked in the order parity, connectivity, edge count.
    Connectivity is over all ``n`` vertices, so isolated vertices fail it.
    """
    if any(g.degree(v) % 2 for v in range(g.n)):
        return "parity"
    if not is_connected(g):
        return "connectivity"
    if g.m < 3:
        return "too_few_edges"
    return None


def is_eulerian(g: Graph) -> bool:
    return eulerian_failure(g) is None


def euler_circuit(g: Graph) -> EulerCircuit:
    """Hierholzer's algorithm, iterative, always taking the smallest unused neighbor.

    Raises NotEulerian naming the failed condition.
    """
    failure = eulerian_failure(g)
    if failure is not None:
        detail = {
            "parity": "odd-degree vertices " + " ".join(map(str, odd_vertices(g))),
            "connectivity": "graph is disconnected",
            "too_few_edges": f"only {g.m} edges",
        }[failure]
        raise NotEulerian(failure, detail)

    nbrs = [sorted(g.neighbors(v)) for v in range(g.n)]
    ptr = [0] * g.n
    used: set[tuple[int, int]] = set()
    stack = [0]
    out = []
    while stack:
        v = stack[-1]
        row = nbrs[v]
        i = ptr[v]
        while i < len(row) and (min(v, row[i]), max(v, row[i])) in used:
            i += 1
        ptr[v] = i
        if i == len(row):
            out.append(stack.pop())
        else:
            w = row[i]
            used.add((min(v, w), max(v, w)))
            stack.append(w)
    out.reverse()
    return EulerCircuit(tuple(out[:-1]))


def check_circuit(g: Graph, walk: Sequence[int]) -> bool:
    """Independent check that ``walk`` (cyclic) uses every edge of ``g`` exactly once."""
    t = len(walk)
    if t < 3 or t != g.m:
        return False
    seen = set()
    for i in range(t):
        u, v = walk[i], walk[(i + 1) % t]
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            return False
        e = (min(u, v), max(u, v))
        if e in seen:
            return False
        seen.add(e)
    return len(seen) == g.m
