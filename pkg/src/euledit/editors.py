"""Turn a simple graph into an Eulerian one by edge toggles.

Three planners, one per edit mode:

* :func:`plan_edit` pairs the odd vertices in ascending order and toggles the
  edge between each pair.
* :func:`plan_extend` greedily adds edges between non-adjacent odd vertices;
  the leftover clique is paired off through a vertex adjacent to neither
  endpoint (two additions per pair).
* :func:`plan_reduce` greedily removes edges between adjacent odd vertices;
  the leftover independent set is paired off through a common neighbor (two
  removals per pair). Every removal must lie on a triangle of the working
  graph, so a removal never disconnects it.

:func:`eulerize` runs a planner and then, for the edit and extend modes,
reconnects the graph with parity-preserving moves if the planned toggles left
it disconnected.
"""

from __future__ import annotations

import enum
import itertools
from collections import deque
from dataclasses import dataclass, field

from .errors import InapplicableOp, NotExtendable, NotReducible, RepairFailed
from .graph import Graph, eulerian_failure, is_connected, is_eulerian, odd_vertices


class Mode(str, enum.Enum):
    EDIT = "edit"
    EXTEND = "extend"
    REDUCE = "reduce"


class OpKind(str, enum.Enum):
    ADD = "add"
    REMOVE = "remove"


@dataclass(frozen=True, order=True)
class EditOp:
    kind: OpKind
    u: int
    v: int

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError("an edit op needs two distinct endpoints")
        if self.u > self.v:
            lo, hi = self.v, self.u
            object.__setattr__(self, "u", lo)
            object.__setattr__(self, "v", hi)

    @classmethod
    def add(cls, u, v):
        return cls(OpKind.ADD, u, v)

    @classmethod
    def remove(cls, u, v):
        return cls(OpKind.REMOVE, u, v)

    def inverted(self) -> "EditOp":
        kind = OpKind.REMOVE if self.kind is OpKind.ADD else OpKind.ADD
        return EditOp(kind, self.u, self.v)

    def __str__(self):
        return f"{'ADD' if self.kind is OpKind.ADD else 'DEL'} {self.u} {self.v}"


@dataclass
class EditPlan:
    """Ordered toggles plus the bookkeeping the planners produce.

    ``pairing`` holds the odd-vertex pairs joined directly, ``residual`` the
    odd vertices left over after greedy pairing (a clique for extend, an
    independent set for reduce) and ``witnesses`` the helper vertex used for
    each consecutive residual pair. ``strategy`` is ``"greedy"`` unless the
    extend planner had to fall back to a spanning-forest T-join.
    """

    mode: Mode
    ops: list[EditOp] = field(default_factory=list)
    lower_bound: int = 0
    repair_ops: int = 0
    pairing: list[tuple[int, int]] = field(default_factory=list)
    residual: list[int] = field(default_factory=list)
    witnesses: list[int] = field(default_factory=list)
    strategy: str = "greedy"

    @property
    def achieved(self) -> int:
        return len(self.ops)

    def __str__(self):
        return "\n".join(str(op) for op in self.ops)


@dataclass(frozen=True)
class VerifyReport:
    eulerian: bool
    failed_condition: str | None
    final_T: int


class _Work:
    """Mutable working copy of a graph that records every toggle."""

    def __init__(self, g: Graph):
        self.adj = g.adjacency()
        self.ops: list[EditOp] = []

    @property
    def n(self):
        return len(self.adj)

    def add(self, u, v):
        assert v not in self.adj[u]
        self.adj[u].add(v)
        self.adj[v].add(u)
        self.ops.append(EditOp.add(u, v))

    def remove(self, u, v):
        assert v in self.adj[u]
        self.adj[u].discard(v)
        self.adj[v].discard(u)
        self.ops.append(EditOp.remove(u, v))

    def undo(self):
        op = self.ops.pop()
        if op.kind is OpKind.ADD:
            self.adj[op.u].discard(op.v)
            self.adj[op.v].discard(op.u)
        else:
            self.adj[op.u].add(op.v)
            self.adj[op.v].add(op.u)

    def components(self):
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [s], deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def edge_count(self):
        return sum(len(s) for s in self.adj) // 2

    def graph(self) -> Graph:
        return Graph._trusted(self.adj)


def parity_lower_bound(g: Graph) -> int:
    """Each toggle flips exactly two parities, so at least T/2 toggles are needed."""
    return len(odd_vertices(g)) // 2


def plan_edit(g: Graph) -> EditPlan:
    odd = odd_vertices(g)
    plan = EditPlan(Mode.EDIT, lower_bound=len(odd) // 2)
    for i in range(0, len(odd), 2):
        u, v = odd[i], odd[i + 1]
        plan.ops.append(EditOp.remove(u, v) if g.has_edge(u, v) else EditOp.add(u, v))
        plan.pairing.append((u, v))
    return plan


def edit_witnesses_hold(g: Graph, plan: EditPlan) -> bool:
    """True when every pair whose edge the edit plan removes keeps a common neighbor.

    Under this condition a connected input stays connected after the plan.
    """
    h = apply_plan(g, plan)
    removed = {(op.u, op.v) for op in plan.ops if op.kind is OpKind.REMOVE}
    for u, v in plan.pairing:
        if (u, v) in removed and not (h.neighbors(u) & h.neighbors(v)):
            return False
    return True


# -- extension ---------------------------------------------------------------


def _complement_path(work: _Work, a: int, b: int) -> list[int] | None:
    """Shortest path from a to b using only non-edges of the working graph."""
    n = work.n
    prev = {a: None}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            break
        nx = work.adj[x]
        for y in range(n):
            if y != x and y not in prev and y not in nx:
                prev[y] = x
                queue.append(y)
    if b not in prev:
        return None
    path = [b]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path[::-1]


def _extend_greedy(g: Graph) -> EditPlan | None:
    odd = odd_vertices(g)
    plan = EditPlan(Mode.EXTEND, lower_bound=len(odd) // 2)
    work = _Work(g)
    marked = set()
    for i, u in enumerate(odd):
        if u in marked:
            continue
        for v in odd[i + 1:]:
            if v not in marked and v not in work.adj[u]:
                work.add(u, v)
                marked.update((u, v))
                plan.pairing.append((u, v))
                break
    plan.residual = [u for u in odd if u not in marked]
    everyone = range(work.n)
    for k in range(0, len(plan.residual), 2):
        a, b = plan.residual[k], plan.residual[k + 1]
        z = next(
            (z for z in everyone
             if z != a and z != b and z not in work.adj[a] and z not in work.adj[b]),
            None,
        )
        if z is not None:
            work.add(a, z)
            work.add(b, z)
            plan.witnesses.append(z)
            continue
        # no single helper vertex; a longer path through non-edges still fixes parity
        path = _complement_path(work, a, b)
        if path is None:
            return None
        for x, y in zip(path, path[1:]):
            work.add(x, y)
        plan.witnesses.append(-1)
        plan.strategy = "greedy+path"
    plan.ops = work.ops
    return plan


def _extend_tjoin(g: Graph, lower_bound: int | None = None) -> EditPlan | None:
    """T-join of the odd vertices inside a BFS spanning forest of the complement."""
    n = g.n
    odd = odd_vertices(g)
    if lower_bound is None:
        lower_bound = len(odd) // 2
    demand = [False] * n
    for v in odd:
        demand[v] = True
    parent = [-1] * n
    order = []
    seen = [False] * n
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        start = len(order)
        order.append(root)
        i = start
        while i < len(order):
            x = order[i]
            i += 1
            nx = g.neighbors(x)
            for y in range(n):
                if not seen[y] and y != x and y not in nx:
                    seen[y] = True
                    parent[y] = x
                    order.append(y)
    ops = []
    for x in reversed(order):
        if parent[x] < 0:
            if demand[x]:
                return None
            continue
        if demand[x]:
            ops.append(EditOp.add(x, parent[x]))
            demand[x] = False
            demand[parent[x]] = not demand[parent[x]]
    ops.sort()
    return EditPlan(Mode.EXTEND, ops=ops, lower_bound=lower_bound, strategy="tjoin")


def _extend_connect_first(g: Graph, max_candidates: int = 4096) -> EditPlan | None:
    """Join the components by a path of cross edges, then fix parity by a T-join.

    Cross-component pairs are never edges, so any choice of path endpoints is
    addable; the cheapest candidate whose T-join exists wins.
    """
    comps = [c for c in _Work(g).components()]
    if len(comps) == 1:
        return None
    lower = parity_lower_bound(g)
    # path C0 -> C1 -> ... : leave C_i from x_i, enter C_{i+1} at y_{i+1}
    slots = []
    for i, c in enumerate(comps):
        if i > 0:
            slots.append(c)  # entry vertex
        if i < len(comps) - 1:
            slots.append(c)  # exit vertex
    best = None
    for count, choice in enumerate(itertools.product(*slots)):
        if count >= max_candidates:
            break
        exits = [choice[0]] + [choice[2 * i] for i in range(1, len(comps) - 1)]
        entries = [choice[2 * i - 1] for i in range(1, len(comps))]
        tree = [EditOp.add(x, y) for x, y in zip(exits, entries)]
        joined = apply_plan(g, tree)
        tj = _extend_tjoin(joined, lower)
        if tj is None:
            continue
        cost = len(tree) + tj.achieved
        if best is None or cost < best[0]:
            best = (cost, tree + tj.ops)
    if best is None:
        return None
    return EditPlan(Mode.EXTEND, ops=best[1], lower_bound=lower, strategy="connect-first")


def plan_extend(g: Graph) -> EditPlan:
    """Addition-only parity fix.

    Raises NotExtendable when no set of added edges makes every degree even.
    """
    plan = _extend_greedy(g)
    if plan is None:
        plan = _extend_tjoin(g)
    if plan is None:
        raise NotExtendable("odd vertices cannot be paired through non-edges")
    return plan


# -- reduction ---------------------------------------------------------------


def _reduce_attempt(g: Graph, order: list[int]) -> EditPlan | None:
    plan = EditPlan(Mode.REDUCE, lower_bound=len(order) // 2)
    work = _Work(g)
    adj = work.adj
    marked = set()
    for i, u in enumerate(order):
        if u in marked:
            continue
        for v in order[i + 1:]:
            if v in marked or v not in adj[u]:
                continue
            if adj[u] & adj[v]:
                work.remove(u, v)
                marked.update((u, v))
                plan.pairing.append((min(u, v), max(u, v)))
                break
    plan.residual = [u for u in order if u not in marked]
    for k in range(0, len(plan.residual), 2):
        a, b = plan.residual[k], plan.residual[k + 1]
        for s in sorted(adj[a] & adj[b]):
            if not adj[a] & adj[s]:
                continue
            work.remove(a, s)
            if adj[b] & adj[s]:
                work.remove(b, s)
                plan.witnesses.append(s)
                break
            work.undo()
        else:
            return None
    if work.edge_count() < 3:
        return None
    plan.ops = work.ops
    return plan


def plan_reduce(g: Graph) -> EditPlan:
    """Deletion-only plan; every removal lies on a triangle of the working graph.

    Tries the ascending odd-vertex order first, then its rotations and the
    rotations of the descending order (at most 2T attempts).
    """
    if g.n < 3 or g.m < 3:
        raise NotReducible(f"graph has n={g.n}, m={g.m}; removals cannot leave 3 edges")
    if not is_connected(g):
        raise NotReducible("graph is disconnected and removals cannot reconnect it")
    odd = odd_vertices(g)
    if not odd:
        return EditPlan(Mode.REDUCE)
    desc = odd[::-1]
    orders = [odd[k:] + odd[:k] for k in range(len(odd))]
    orders += [desc[k:] + desc[:k] for k in range(len(odd))]
    for order in orders:
        plan = _reduce_attempt(g, order)
        if plan is not None:
            return plan
    raise NotReducible(f"no triangle-safe removal sequence found in {len(orders)} attempts")


# -- application and verification --------------------------------------------


def apply_plan(g: Graph, plan: EditPlan | list[EditOp]) -> Graph:
    ops = plan.ops if isinstance(plan, EditPlan) else plan
    adj = g.adjacency()
    for i, op in enumerate(ops):
        if not (0 <= op.u < g.n and 0 <= op.v < g.n):
            raise InapplicableOp(i, op)
        present = op.v in adj[op.u]
        if (op.kind is OpKind.ADD) == present:
            raise InapplicableOp(i, op)
        if present:
            adj[op.u].discard(op.v)
            adj[op.v].discard(op.u)
        else:
            adj[op.u].add(op.v)
            adj[op.v].add(op.u)
    return Graph._trusted(adj)


def verify_plan(g: Graph, plan: EditPlan | list[EditOp]) -> VerifyReport:
    h = apply_plan(g, plan)
    failure = eulerian_failure(h)
    return VerifyReport(failure is None, failure, len(odd_vertices(h)))


# -- connectivity repair -----------------------------------------------------


def _repair_edit(work: _Work) -> None:
    """Reconnect an all-even working graph without changing any parity."""
    comps = work.components()
    if len(comps) == 1:
        if work.edge_count() == 0:
            raise RepairFailed(Mode.EDIT.value, f"n={work.n} admits no Eulerian graph")
        return
    if len(comps) >= 3 or work.edge_count() == 0:
        # one representative per component, joined in a cycle: +2 on each
        reps = [c[0] for c in comps]
        if len(reps) < 3:
            raise RepairFailed(Mode.EDIT.value, f"n={work.n} admits no Eulerian graph")
        for x, y in zip(reps, reps[1:] + reps[:1]):
            work.add(x, y)
        return
    a_comp, b_comp = comps
    if len(a_comp) == 1:
        a_comp, b_comp = b_comp, a_comp
    u = a_comp[0]
    if len(b_comp) > 1:
        v = b_comp[0]
        w = min(work.adj[v])
        work.add(u, v)
        work.add(u, w)
        work.remove(v, w)
    else:
        c = b_comp[0]
        b = min(work.adj[u])
        work.add(c, u)
        work.add(c, b)
        work.remove(u, b)


def _repair_extend(work: _Work) -> bool:
    """Reconnect using additions only; returns False when no such move exists."""
    comps = work.components()
    if len(comps) == 1:
        return work.edge_count() >= 3
    if len(comps) >= 3:
        reps = [c[0] for c in comps]
        for x, y in zip(reps, reps[1:] + reps[:1]):
            work.add(x, y)
        return True
    a_comp, b_comp = comps
    for side, other in ((a_comp, b_comp), (b_comp, a_comp)):
        for a in side:
            z = next((z for z in side if z != a and z not in work.adj[a]), None)
            if z is not None:
                b = other[0]
                work.add(a, b)
                work.add(b, z)
                work.add(z, a)
                return True
    if len(a_comp) >= 2 and len(b_comp) >= 2:
        a1, a2 = a_comp[:2]
        b1, b2 = b_comp[:2]
        for x, y in ((a1, b1), (b1, a2), (a2, b2), (b2, a1)):
            work.add(x, y)
        return True
    return False


def _finish_extend(g: Graph, plan: EditPlan) -> EditPlan | None:
    work = _Work(g)
    for op in plan.ops:
        work.add(op.u, op.v)
    before = len(work.ops)
    if not _repair_extend(work):
        return None
    plan.repair_ops = len(work.ops) - before
    plan.ops = work.ops
    return plan


def eulerize(g: Graph, mode: Mode | str) -> tuple[Graph, EditPlan]:
    """Return an Eulerian graph reachable from ``g`` in ``mode`` and the plan that reaches it.

    Raises NotExtendable, NotReducible or RepairFailed when the mode's
    planner cannot produce an Eulerian graph.
    """
    mode = Mode(mode)
    if is_eulerian(g):
        return g, EditPlan(mode)

    if mode is Mode.EDIT:
        plan = plan_edit(g)
        work = _Work(g)
        for op in plan.ops:
            (work.add if op.kind is OpKind.ADD else work.remove)(op.u, op.v)
        before = len(work.ops)
        _repair_edit(work)
        plan.repair_ops = len(work.ops) - before
        plan.ops = work.ops
    elif mode is Mode.EXTEND:
        if g.n < 3:
            raise NotExtendable(f"no Eulerian simple graph has n={g.n} vertices")
        try:
            plan = _finish_extend(g, plan_extend(g))
        except NotExtendable:
            plan = None
        for fallback in (_extend_tjoin, _extend_connect_first):
            if plan is not None:
                break
            candidate = fallback(g)
            plan = _finish_extend(g, candidate) if candidate is not None else None
        if plan is None:
            raise NotExtendable("graph cannot be reconnected by additions alone")
    else:
        plan = plan_reduce(g)

    h = apply_plan(g, plan)
    if not is_eulerian(h):
        raise AssertionError(f"{mode.value} plan produced a non-Eulerian graph: {eulerian_failure(h)}")
    return h, plan
