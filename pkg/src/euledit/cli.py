"""``euledit`` command line.

Exit status: 0 on success, 1 when the requested result does not exist
(not extendable, not reducible, not Eulerian, oracle infeasible), 2 on usage
or I/O errors.
"""

from __future__ import annotations

import argparse
import sys

from . import editors, experiments, formats, oracle
from .errors import EulerError, FormatError, InapplicableOp, NotEulerian
from .graph import check_circuit, euler_circuit
from .sampler import DEFAULT_SEED, parse_seed, sample_gnp

EXIT_OK, EXIT_INFEASIBLE, EXIT_USAGE = 0, 1, 2


def _probability(text):
    try:
        p = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal probability: {text!r}") from None
    if not 0.0 <= p <= 1.0:
        raise argparse.ArgumentTypeError(f"probability must lie in [0, 1], got {text}")
    return p


def _seed(text):
    try:
        return parse_seed(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _params_line(args) -> str:
    skip = {"func", "command"}
    return "params: " + " ".join(
        f"{k}={v}" for k, v in sorted(vars(args).items()) if k not in skip
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="euledit", description="Eulerian edits of simple graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("sample", help="sample G(n, p) to an edge-list file")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--p", type=_probability, required=True)
    s.add_argument("--seed", type=_seed, default=DEFAULT_SEED)
    s.add_argument("--out", default="-")
    s.set_defaults(func=cmd_sample)

    e = sub.add_parser("eulerize", help="plan edits that make a graph Eulerian")
    e.add_argument("--in", dest="infile", required=True)
    e.add_argument("--mode", choices=[m.value for m in editors.Mode], default="edit")
    e.add_argument("--plan-out")
    e.add_argument("--graph-out")
    e.set_defaults(func=cmd_eulerize)

    v = sub.add_parser("verify", help="apply a plan and report whether the result is Eulerian")
    v.add_argument("--in", dest="infile", required=True)
    v.add_argument("--plan", required=True)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("circuit", help="print an Euler circuit")
    c.add_argument("--in", dest="infile", required=True)
    c.set_defaults(func=cmd_circuit)

    o = sub.add_parser("oracle", help="exact edit number by exhaustive search (small n)")
    o.add_argument("--in", dest="infile", required=True)
    o.add_argument("--mode", choices=[m.value for m in editors.Mode], default="edit")
    o.add_argument("--budget", type=int)
    o.set_defaults(func=cmd_oracle)

    x = sub.add_parser("experiment", help="Monte Carlo experiments")
    x.add_argument("kind", choices=["concentration", "moments", "events", "independence"])
    x.add_argument("--n", type=int, nargs="+", required=True)
    x.add_argument("--p", type=_probability, required=True)
    x.add_argument("--trials", type=int, required=True)
    x.add_argument("--seed", type=_seed, default=DEFAULT_SEED)
    x.add_argument("--eta", type=float, default=0.1)
    x.add_argument("--q", type=int, default=2)
    x.add_argument("--eps", type=float, default=0.1)
    x.add_argument("--b", type=int, default=2)
    x.add_argument("--exact-clique", action="store_true")
    x.add_argument("--workers", type=int, default=1)
    x.add_argument("--csv", default="-")
    x.set_defaults(func=cmd_experiment)
    return parser


def _emit(text, dest):
    if dest in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(dest, "w", encoding="ascii") as fh:
            fh.write(text)


def cmd_sample(args):
    g = sample_gnp(args.n, args.p, args.seed)
    _emit(formats.format_edge_list(g, [_params_line(args)]), args.out)
    return EXIT_OK


def cmd_eulerize(args):
    g = formats.read_edge_list(args.infile)
    try:
        h, plan = editors.eulerize(g, args.mode)
    except EulerError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    comments = [
        _params_line(args),
        f"achieved={plan.achieved} lower_bound={plan.lower_bound} repair_ops={plan.repair_ops}",
    ]
    if args.plan_out:
        formats.write_plan(plan, args.plan_out, comments)
    else:
        sys.stdout.write(formats.format_plan(plan))
    if args.graph_out:
        formats.write_edge_list(h, args.graph_out, comments)
    print(f"# achieved={plan.achieved} lower_bound={plan.lower_bound} repair_ops={plan.repair_ops}",
          file=sys.stderr)
    return EXIT_OK


def cmd_verify(args):
    g = formats.read_edge_list(args.infile)
    plan = formats.read_plan(args.plan)
    report = editors.verify_plan(g, plan)
    print(f"eulerian={str(report.eulerian).lower()}")
    if report.failed_condition:
        print(f"failed_condition={report.failed_condition}")
    print(f"final_T={report.final_T}")
    return EXIT_OK if report.eulerian else EXIT_INFEASIBLE


def cmd_circuit(args):
    g = formats.read_edge_list(args.infile)
    try:
        circ = euler_circuit(g)
    except NotEulerian as exc:
        print(f"error: not Eulerian: {exc.detail}", file=sys.stderr)
        return EXIT_INFEASIBLE
    assert check_circuit(g, circ.walk)
    print(" ".join(map(str, circ.walk)))
    return EXIT_OK


def cmd_oracle(args):
    g = formats.read_edge_list(args.infile)
    res = oracle.exact_edit_number(g, args.mode, args.budget)
    if res.value is None:
        print("INFEASIBLE" if res.status == "infeasible" else "BUDGET_EXHAUSTED")
        print(f"# explored={res.explored}")
        return EXIT_INFEASIBLE
    print(res.value)
    print(f"# explored={res.explored}")
    sys.stdout.write(formats.format_plan(res.witness))
    return EXIT_OK


def cmd_experiment(args):
    ns = args.n
    if args.kind != "moments" and len(ns) != 1:
        raise ValueError(f"experiment {args.kind} takes a single --n")
    common = {"trials": args.trials, "seed": args.seed, "workers": args.workers}
    if args.kind == "concentration":
        report = experiments.run_concentration(ns[0], args.p, eta=args.eta, **common)
    elif args.kind == "moments":
        report = experiments.run_moments(ns, args.p, args.q, **common)
    elif args.kind == "events":
        report = experiments.run_events(ns[0], args.p, eps=args.eps, exact_clique=args.exact_clique, **common)
    else:
        report = experiments.run_independence(ns[0], args.p, args.b, **common)
    dest = sys.stdout if args.csv == "-" else args.csv
    experiments.write_report(report, dest, comments=[_params_line(args)])
    return EXIT_OK


def dispatch(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, InapplicableOp, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


main = dispatch


if __name__ == "__main__":
    sys.exit(dispatch())
