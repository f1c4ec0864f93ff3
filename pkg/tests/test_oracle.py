import itertools
import math

import pytest

from euledit.editors import Mode, apply_plan, eulerize, parity_lower_bound
from euledit.errors import NotExtendable, NotReducible, RepairFailed
from euledit.graph import Graph, is_eulerian
from euledit.oracle import (
    MAX_ENUM_N,
    enumerate_graphs,
    exact_edit_number,
    exact_edit_number_iddfs,
    exact_parity_stats,
    max_clique_exact,
)
from euledit.sampler import derive_seed, sample_gnp

from conftest import c6_chord, triangle_plus_isolated

INF = None
CASES = [
    ("path", Graph.path(3), {"edit": 1, "extend": 1, "reduce": INF}),
    ("k4", Graph.complete(4), {"edit": 2, "extend": INF, "reduce": 2}),
    ("c6_chord", c6_chord(), {"edit": 1, "extend": 2, "reduce": 1}),
    ("triangle_isolated", triangle_plus_isolated(), {"edit": 3, "extend": INF, "reduce": INF}),
    ("empty5", Graph(5), {"edit": 5, "extend": 5, "reduce": INF}),
    ("triangle", Graph.complete(3), {"edit": 0, "extend": 0, "reduce": 0}),
]


@pytest.mark.parametrize("name,g,expected", CASES, ids=[c[0] for c in CASES])
@pytest.mark.parametrize("mode", ["edit", "extend", "reduce"])
def test_oracle_examples(name, g, expected, mode):
    res = exact_edit_number(g, mode)
    assert res.value == expected[mode]
    assert exact_edit_number_iddfs(g, mode) == expected[mode]
    if res.feasible:
        h = apply_plan(g, res.witness)
        assert is_eulerian(h) and len(res.witness.ops) == res.value
    else:
        assert res.status == "infeasible"


def test_oracle_budget():
    res = exact_edit_number(Graph(5), "edit", budget=3)
    assert res.status == "budget" and res.value is None


def test_enumerate_counts():
    assert [sum(1 for _ in enumerate_graphs(n)) for n in (2, 3, 4)] == [2, 8, 64]
    with pytest.raises(ValueError):
        next(iter(enumerate_graphs(MAX_ENUM_N + 1)))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_bfs_and_iddfs_agree_and_bound_holds(n):
    for g in enumerate_graphs(n):
        for mode in Mode:
            res = exact_edit_number(g, mode)
            assert res.value == exact_edit_number_iddfs(g, mode)
            if res.feasible:
                assert res.value >= parity_lower_bound(g)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_planners_never_beat_oracle(n):
    for g in enumerate_graphs(n):
        for mode in Mode:
            best = exact_edit_number(g, mode)
            try:
                h, plan = eulerize(g, mode)
            except (NotExtendable, NotReducible, RepairFailed):
                if mode is not Mode.REDUCE:
                    assert not best.feasible
                continue
            assert is_eulerian(h)
            assert best.feasible and plan.achieved >= best.value


def _clique_brute(g):
    for k in range(g.n, 0, -1):
        for sub in itertools.combinations(range(g.n), k):
            if all(g.has_edge(u, v) for u, v in itertools.combinations(sub, 2)):
                return k
    return 0


def test_max_clique_against_brute_force():
    assert max_clique_exact(Graph(0)) == 0
    assert max_clique_exact(Graph(4)) == 1
    assert max_clique_exact(Graph.complete(7)) == 7
    for i in range(150):
        s = derive_seed(5, i)
        g = sample_gnp(4 + s % 10, [0.3, 0.5, 0.8][s % 3], s)
        assert max_clique_exact(g) == _clique_brute(g)
    with pytest.raises(ValueError):
        max_clique_exact(Graph(65))


def test_exact_parity_stats_examples():
    st = exact_parity_stats(5, 0.5, 2)
    assert st["joint"] == pytest.approx(0.25, abs=1e-12)
    assert st["product"] == pytest.approx(0.25, abs=1e-12)
    assert st["deviation"] == pytest.approx(0.0, abs=1e-12)
    assert exact_parity_stats(3, 0.25, 1)["joint"] == pytest.approx(0.375, abs=1e-12)


@pytest.mark.parametrize("n,p", [(3, 0.3), (4, 0.7), (5, 0.2), (6, 0.9)])
def test_exact_parity_stats_b1_closed_form(n, p):
    # independent of the implementation: odd-binomial sum
    direct = sum(math.comb(n - 1, k) * p**k * (1 - p) ** (n - 1 - k) for k in range(1, n, 2))
    assert exact_parity_stats(n, p, 1)["joint"] == pytest.approx(direct, abs=1e-12)
