"""Walk through the three edit modes on a few small graphs.

Run with ``python3 demos/01_small_graphs.py``.
"""

# %%
from euledit import Graph, Mode, eulerize, euler_circuit, parity_lower_bound
from euledit.oracle import exact_edit_number
from euledit.errors import EulerError

graphs = {
    "path 0-1-2": Graph.path(3),
    "K4": Graph.complete(4),
    "C6 plus chord 0-2": Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 2)]),
    "triangle + isolated vertex": Graph(4, [(0, 1), (0, 2), (1, 2)]),
    "empty graph on 5 vertices": Graph(5),
}

# %%
# For each graph and mode: the planner's result next to the exhaustive optimum.
for name, g in graphs.items():
    print(f"{name}: T/2 = {parity_lower_bound(g)}")
    for mode in Mode:
        best = exact_edit_number(g, mode)
        try:
            h, plan = eulerize(g, mode)
            got = f"{plan.achieved} ops ({', '.join(map(str, plan.ops)) or 'none'})"
        except EulerError as exc:
            got = type(exc).__name__
        print(f"  {mode.value:7s} planner: {got:40s} optimum: {best.value if best.feasible else 'infeasible'}")

# %%
# Once Eulerian, the circuit follows the smallest unused neighbour at each step.
h, _ = eulerize(graphs["C6 plus chord 0-2"], Mode.REDUCE)
print("circuit:", " ".join(map(str, euler_circuit(h).walk)))
