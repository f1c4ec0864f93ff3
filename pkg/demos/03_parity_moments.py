"""Odd-degree counts: moments at p = 1/2 and near-independence of parities.

Run with ``python3 demos/03_parity_moments.py``.
"""

# %%
from euledit.experiments import run_independence, run_moments
from euledit.oracle import exact_parity_stats
from euledit.sampler import epsilon_b, odd_degree_prob

# %%
# At p = 1/2 the variance of T is n/4 and the fourth central moment about 3n^2/16.
for q in (2, 4):
    for r in run_moments([50, 100, 200], 0.5, q, trials=2000):
        print(f"q={q} n={r.n:4d} mu_hat={r.mu_hat:7.2f} ratio={r.ratio:.4f}")

# %%
# The bias of a single vertex parity shrinks geometrically in n.
for n in (5, 10, 20):
    print(f"n={n:3d} p=0.3 P(odd)={odd_degree_prob(n, 0.3):.8f} eps_1={epsilon_b(n, 0.3, 1):.2e}")

# %%
# Joint parity of two vertices against the product of marginals.
exact = exact_parity_stats(5, 0.3, 2)
rep = run_independence(5, 0.3, 2, trials=50_000)
print(f"exact deviation {exact['joint'] - exact['product']:+.5f}  "
      f"simulated {rep.aggregates['deviation']:+.5f} +- {rep.aggregates['stderr']:.5f}")
