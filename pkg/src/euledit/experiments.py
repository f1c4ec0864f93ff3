"""Monte Carlo experiments on G(n, p) and their CSV reports.

Each trial ``i`` samples its graph from ``derive_seed(master, i)``, so a trial
is a pure function of its index. Trials can be spread over worker processes
and results are always gathered back in trial order, which makes the CSV
output independent of the worker count.
"""

from __future__ import annotations

import csv
import functools
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Sequence, TextIO

import numpy as np

from .editors import Mode, eulerize, plan_extend, plan_reduce
from .errors import EulerError
from .graph import Graph, is_connected
from .oracle import MAX_CLIQUE_N, MAX_ENUM_N, exact_parity_stats, max_clique_exact
from .sampler import (
    DEFAULT_SEED,
    ProbabilityWindow,
    classify_p,
    derive_seed,
    odd_degree_prob,
    parse_seed,
    sample_adjacency,
    vertex_parities,
)

REGIME_NOTE = (
    "strong p-window is empty at this n; results show the limiting behaviour, "
    "not the asymptotic hypotheses"
)


@dataclass
class TrialRecord:
    trial: int
    seed: int
    n: int
    p: float
    T: int
    achieved_edit: int | None = None
    achieved_ext: int | None = None
    achieved_red: int | None = None
    repair_edit: int | None = None
    repair_ext: int | None = None
    repair_red: int | None = None
    in_window: bool | None = None
    e_con: bool | None = None
    e_odd: bool | None = None
    e_good_h: bool | None = None
    e_good_hc: bool | None = None
    e_cliq: bool | None = None
    residual_x: int | None = None
    residual_y: int | None = None


@dataclass
class MomentReport:
    n: int
    p: float
    q: int
    trials: int
    mu_hat: float
    moment_q: float
    ratio: float
    sd_hat: float
    expected_mean: float

    @property
    def half_n(self) -> float:
        return self.n / 2

    @property
    def nu(self) -> float:
        return self.mu_hat / self.n


@dataclass
class ExperimentReport:
    kind: str
    params: dict[str, Any]
    aggregates: dict[str, Any]
    window: ProbabilityWindow | None
    duration: float
    records: list[TrialRecord] = field(default_factory=list)


def _window(n, p):
    return classify_p(n, p) if n >= 2 else None


def _run_trials(fn: Callable[[int], Any], trials: int, workers: int) -> list:
    if workers <= 1 or trials <= 1:
        return [fn(i) for i in range(trials)]
    chunk = max(1, trials // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, range(trials), chunksize=chunk))


def _check_trials(trials):
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")


def _adjacency_graph(a: np.ndarray) -> Graph:
    return Graph._trusted([np.flatnonzero(row).tolist() for row in a])


def _mean_T_check(Ts: np.ndarray, n: int, p: float) -> dict[str, Any]:
    expected = n * odd_degree_prob(n, p) if n >= 1 else 0.0
    sd = float(Ts.std(ddof=1)) if Ts.size > 1 else 0.0
    tol = 4 * sd / math.sqrt(Ts.size)
    return {
        "mean_T": float(Ts.mean()),
        "expected_T": expected,
        "mean_T_consistent": bool(abs(Ts.mean() - expected) <= tol or tol == 0 and Ts.mean() == expected),
    }


# -- concentration -----------------------------------------------------------


def _concentration_trial(i, *, n, p, seed, lo, hi):
    s = derive_seed(seed, i)
    g = _adjacency_graph(sample_adjacency(n, p, s))
    T = sum(g.degree(v) % 2 for v in range(n))
    rec = TrialRecord(trial=i, seed=s, n=n, p=p, T=T)
    for mode, key in ((Mode.EDIT, "edit"), (Mode.EXTEND, "ext"), (Mode.REDUCE, "red")):
        try:
            _, plan = eulerize(g, mode)
        except EulerError:
            continue
        setattr(rec, f"achieved_{key}", plan.achieved)
        setattr(rec, f"repair_{key}", plan.repair_ops)
    values = (rec.achieved_edit, rec.achieved_ext, rec.achieved_red)
    rec.in_window = all(v is not None and lo <= v <= hi for v in values)
    return rec


def run_concentration(
    n: int,
    p: float,
    trials: int,
    eta: float,
    seed: int = DEFAULT_SEED,
    workers: int = 1,
) -> ExperimentReport:
    """Run all three planners on ``trials`` samples and test the n/4 +- n^(1/2+eta) window."""
    _check_trials(trials)
    if not eta > 0:
        raise ValueError(f"eta must be positive, got {eta}")
    seed = parse_seed(seed)
    started = time.perf_counter()
    half = n ** (0.5 + eta)
    lo, hi = n / 4 - half, n / 4 + half
    fn = functools.partial(_concentration_trial, n=n, p=p, seed=seed, lo=lo, hi=hi)
    records = _run_trials(fn, trials, workers)

    def frac(pred):
        return sum(1 for r in records if pred(r)) / trials

    def mean(key):
        vals = [getattr(r, key) for r in records if getattr(r, key) is not None]
        return float(np.mean(vals)) if vals else None

    window = _window(n, p)
    agg = {
        "window_lo": lo,
        "window_hi": hi,
        "frac_in_window": frac(lambda r: r.in_window),
        "frac_edit_at_bound": frac(lambda r: r.achieved_edit == r.T // 2 and r.repair_edit == 0),
        "frac_feasible_edit": frac(lambda r: r.achieved_edit is not None),
        "frac_feasible_ext": frac(lambda r: r.achieved_ext is not None),
        "frac_feasible_red": frac(lambda r: r.achieved_red is not None),
        "mean_edit": mean("achieved_edit"),
        "mean_ext": mean("achieved_ext"),
        "mean_red": mean("achieved_red"),
        "mean_repair_edit": mean("repair_edit"),
        "mean_repair_ext": mean("repair_ext"),
        "mean_repair_red": mean("repair_red"),
    }
    agg.update(_mean_T_check(np.array([r.T for r in records], dtype=float), n, p))
    if window is None or window.strong_window_empty or not window.strong_ok:
        agg["regime"] = REGIME_NOTE if window is None or window.strong_window_empty else "p outside strong window"
    return ExperimentReport(
        kind="concentration",
        params={"n": n, "p": p, "trials": trials, "eta": eta, "seed": seed, "workers": workers},
        aggregates=agg,
        window=window,
        duration=time.perf_counter() - started,
        records=records,
    )


# -- moments -----------------------------------------------------------------


def _odd_count_trial(i, *, n, p, seed):
    a = sample_adjacency(n, p, derive_seed(seed, i))
    return int((a.sum(axis=1) % 2).sum())


def run_moments(
    n_list: Sequence[int],
    p: float,
    q: int,
    trials: int,
    seed: int = DEFAULT_SEED,
    workers: int = 1,
) -> list[MomentReport]:
    """Empirical mean and q-th central moment of the odd-vertex count T, scaled by n^(q/2)."""
    if q < 2 or q % 2:
        raise ValueError(f"q must be an even integer >= 2 (moment bound holds for every even q >= 2), got {q}")
    _check_trials(trials)
    seed = parse_seed(seed)
    out = []
    for n in n_list:
        fn = functools.partial(_odd_count_trial, n=n, p=p, seed=derive_seed(seed, n))
        Ts = np.array(_run_trials(fn, trials, workers), dtype=float)
        mu = float(Ts.mean())
        mq = float(np.mean((Ts - mu) ** q))
        out.append(MomentReport(
            n=n, p=p, q=q, trials=trials, mu_hat=mu, moment_q=mq,
            ratio=mq / n ** (q / 2),
            sd_hat=float(Ts.std(ddof=1)) if trials > 1 else 0.0,
            expected_mean=n * odd_degree_prob(n, p),
        ))
    return out


# -- random-graph events ----------------------------------------------------


def _has_common_neighbours(a: np.ndarray) -> bool:
    n = a.shape[0]
    if n < 3:
        return False
    m = a.astype(np.int32)
    counts = m @ m
    np.fill_diagonal(counts, 1)
    return bool((counts > 0).all())


def _events_trial(i, *, n, p, seed, eps, exact_clique, clique_bound):
    s = derive_seed(seed, i)
    a = sample_adjacency(n, p, s)
    g = _adjacency_graph(a)
    T = int((a.sum(axis=1) % 2).sum())
    comp = ~a
    np.fill_diagonal(comp, False)
    rec = TrialRecord(trial=i, seed=s, n=n, p=p, T=T)
    rec.e_con = is_connected(g)
    rec.e_odd = abs(T - n / 2) <= n ** (0.5 + eps)
    rec.e_good_h = _has_common_neighbours(a)
    rec.e_good_hc = _has_common_neighbours(comp)
    if exact_clique:
        rec.e_cliq = (
            max_clique_exact(g) <= clique_bound
            and max_clique_exact(_adjacency_graph(comp)) <= clique_bound
        )
    try:
        rec.residual_x = len(plan_extend(g).residual)
    except EulerError:
        pass
    try:
        rec.residual_y = len(plan_reduce(g).residual)
    except EulerError:
        pass
    return rec


def run_events(
    n: int,
    p: float,
    trials: int,
    eps: float,
    seed: int = DEFAULT_SEED,
    exact_clique: bool = False,
    workers: int = 1,
) -> ExperimentReport:
    """Frequencies of connectivity, odd-count window, common neighbours and clique-size events."""
    _check_trials(trials)
    if exact_clique and n > MAX_CLIQUE_N:
        raise ValueError(f"exact clique checks are limited to n <= {MAX_CLIQUE_N}, got {n}")
    seed = parse_seed(seed)
    started = time.perf_counter()
    clique_bound = 2 * math.sqrt(n) * math.log(n) if n >= 2 else 0.0
    fn = functools.partial(
        _events_trial, n=n, p=p, seed=seed, eps=eps,
        exact_clique=exact_clique, clique_bound=clique_bound,
    )
    records = _run_trials(fn, trials, workers)

    def freq(key):
        vals = [getattr(r, key) for r in records]
        if any(v is None for v in vals):
            return None
        return sum(vals) / trials

    xs = [r.residual_x for r in records if r.residual_x is not None]
    ys = [r.residual_y for r in records if r.residual_y is not None]
    agg = {
        "freq_e_con": freq("e_con"),
        "freq_e_odd": freq("e_odd"),
        "freq_e_good_h": freq("e_good_h"),
        "freq_e_good_hc": freq("e_good_hc"),
        "freq_e_cliq": freq("e_cliq"),
        "clique_bound": clique_bound,
        "clique_bound_trivial": clique_bound >= n,
        "max_residual_x": max(xs) if xs else None,
        "max_residual_y": max(ys) if ys else None,
        "mean_residual_x": float(np.mean(xs)) if xs else None,
        "mean_residual_y": float(np.mean(ys)) if ys else None,
    }
    agg.update(_mean_T_check(np.array([r.T for r in records], dtype=float), n, p))
    window = _window(n, p)
    if window is not None and window.strong_window_empty:
        agg["regime"] = REGIME_NOTE
    return ExperimentReport(
        kind="events",
        params={"n": n, "p": p, "trials": trials, "eps": eps, "seed": seed,
                "exact_clique": exact_clique, "workers": workers},
        aggregates=agg,
        window=window,
        duration=time.perf_counter() - started,
        records=records,
    )


# -- near-independence of vertex parities ------------------------------------


def _parity_trial(i, *, n, p, seed, b):
    return vertex_parities(n, p, derive_seed(seed, i), b)


def run_independence(
    n: int,
    p: float,
    b: int,
    trials: int,
    seed: int = DEFAULT_SEED,
    workers: int = 1,
) -> ExperimentReport:
    """Joint frequency of "vertices 0..b-1 all odd" against the product of the marginals.

    ``deviation`` is signed (joint minus product). ``stderr`` is a
    delta-method standard error for it.
    """
    if not 1 <= b <= n:
        raise ValueError(f"need 1 <= b <= n, got b={b}, n={n}")
    _check_trials(trials)
    seed = parse_seed(seed)
    started = time.perf_counter()
    fn = functools.partial(_parity_trial, n=n, p=p, seed=seed, b=b)
    x = np.array(_run_trials(fn, trials, workers), dtype=float).reshape(trials, b)
    z = x.prod(axis=1)
    marg = x.mean(axis=0)
    joint = float(z.mean())
    product = float(np.prod(marg))
    if b == 1:
        deviation, stderr = 0.0, 0.0
    else:
        # influence function of mean(prod X) - prod(mean X_i)
        infl = z.copy()
        for k in range(b):
            others = np.prod(np.delete(marg, k))
            infl -= x[:, k] * others
        deviation = joint - product
        stderr = float(infl.std(ddof=1) / math.sqrt(trials)) if trials > 1 else 0.0
    agg = {"joint_hat": joint, "product_hat": product, "deviation": deviation, "stderr": stderr}
    if n <= MAX_ENUM_N:
        exact = exact_parity_stats(n, p, b)
        agg["exact_joint"] = exact["joint"]
        agg["exact_product"] = exact["product"]
        agg["exact_deviation"] = exact["joint"] - exact["product"]
    return ExperimentReport(
        kind="independence",
        params={"n": n, "p": p, "b": b, "trials": trials, "seed": seed, "workers": workers},
        aggregates=agg,
        window=_window(n, p),
        duration=time.perf_counter() - started,
    )


# -- CSV output --------------------------------------------------------------

CONCENTRATION_COLUMNS = ["trial", "seed", "n", "p", "T", "edit", "ext", "red",
                         "repair_edit", "repair_ext", "repair_red", "in_window"]
MOMENT_COLUMNS = ["n", "p", "q", "trials", "mu_hat", "moment_q", "ratio"]
EVENT_COLUMNS = ["trial", "e_con", "e_odd", "e_good_h", "e_good_hc", "e_cliq", "residual_x", "residual_y"]
INDEPENDENCE_COLUMNS = ["n", "p", "b", "trials", "joint_hat", "product_hat", "deviation", "stderr",
                        "exact_deviation"]


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".12g")
    return str(value)


def _rows(report) -> tuple[list[str], list[list[Any]]]:
    if isinstance(report, list):
        rows = [[r.n, r.p, r.q, r.trials, r.mu_hat, r.moment_q, r.ratio] for r in report]
        return MOMENT_COLUMNS, rows
    kind = report.kind
    agg = report.aggregates
    prm = report.params
    if kind == "concentration":
        rows = [[r.trial, r.seed, r.n, r.p, r.T, r.achieved_edit, r.achieved_ext, r.achieved_red,
                 r.repair_edit, r.repair_ext, r.repair_red, r.in_window] for r in report.records]
        if report.records:
            rows.append(["aggregate", prm["seed"], prm["n"], prm["p"], agg["mean_T"], agg["mean_edit"],
                         agg["mean_ext"], agg["mean_red"], agg["mean_repair_edit"], agg["mean_repair_ext"],
                         agg["mean_repair_red"], agg["frac_in_window"]])
        return CONCENTRATION_COLUMNS, rows
    if kind == "events":
        rows = [[r.trial, r.e_con, r.e_odd, r.e_good_h, r.e_good_hc, r.e_cliq, r.residual_x, r.residual_y]
                for r in report.records]
        if report.records:
            rows.append(["aggregate", agg["freq_e_con"], agg["freq_e_odd"], agg["freq_e_good_h"],
                         agg["freq_e_good_hc"], agg["freq_e_cliq"], agg["mean_residual_x"],
                         agg["mean_residual_y"]])
        return EVENT_COLUMNS, rows
    if kind == "independence":
        row = [prm["n"], prm["p"], prm["b"], prm["trials"], agg["joint_hat"], agg["product_hat"],
               agg["deviation"], agg["stderr"], agg.get("exact_deviation")]
        return INDEPENDENCE_COLUMNS, [row]
    raise ValueError(f"unknown report kind {kind!r}")


def _header_lines(report) -> list[str]:
    if isinstance(report, list):
        lines = ["experiment=moments"]
        if report:
            r = report[0]
            lines.append(f"p={r.p} q={r.q} trials={r.trials}")
        return lines
    lines = [f"experiment={report.kind}"]
    lines.append(" ".join(f"{k}={v}" for k, v in report.params.items()))
    w = report.window
    if w is not None:
        lines.append(
            f"strong_ok={w.strong_ok} weak_ok={w.weak_ok} strong_lower={w.strong_lower:.6g} "
            f"weak_lower={w.weak_lower:.6g} log=natural"
        )
    if "regime" in report.aggregates:
        lines.append(f"note: {report.aggregates['regime']}")
    lines.append(f"duration_s={report.duration:.3f}")
    return lines


def write_report(report: ExperimentReport | list[MomentReport], destination: str | os.PathLike | TextIO,
                 comments: Sequence[str] = ()) -> None:
    """Write ``report`` as CSV.

    Leading ``#`` lines carry parameters, window flags and the wall-clock
    duration; everything after them is deterministic for a fixed seed.
    """
    columns, rows = _rows(report)

    def emit(fh):
        for line in list(comments) + _header_lines(report):
            fh.write(f"# {line}\n")
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(columns)
        for row in rows:
            w.writerow([_fmt(v) for v in row])

    if hasattr(destination, "write"):
        emit(destination)
        return
    try:
        with open(destination, "w", encoding="ascii", newline="") as fh:
            emit(fh)
    except OSError as exc:
        raise OSError(f"cannot write report to {os.fspath(destination)}: {exc.strerror or exc}") from exc


def csv_body(text: str) -> str:
    """The non-comment part of a report, i.e. what the determinism contract covers."""
    return "".join(line + "\n" for line in text.splitlines() if not line.startswith("#"))


def summary(report: ExperimentReport) -> dict[str, Any]:
    out = {"kind": report.kind, **report.params, **report.aggregates}
    if report.window is not None:
        out.update({k: v for k, v in asdict(report.window).items() if k in ("strong_ok", "weak_ok")})
    return out
