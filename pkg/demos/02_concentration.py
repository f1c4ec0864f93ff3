"""How far above the parity bound do the planners land on G(n, 1/2)?

Run with ``python3 demos/02_concentration.py``. Takes a few seconds.
"""

# %%
import numpy as np

from euledit.experiments import run_concentration

# %%
for n in (50, 100, 200):
    rep = run_concentration(n, 0.5, trials=20, eta=0.1)
    T = np.array([r.T for r in rep.records])
    excess = {
        key: np.mean([getattr(r, f"achieved_{key}") - r.T // 2 for r in rep.records])
        for key in ("edit", "ext", "red")
    }
    print(f"n={n:4d} mean T/2={T.mean() / 2:7.2f} n/4={n / 4:6.1f} "
          + " ".join(f"excess_{k}={v:.2f}" for k, v in excess.items()))

# %%
# The strong window on p is empty at these sizes; the report says so.
print(rep.aggregates.get("regime"))
