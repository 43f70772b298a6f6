"""Command-line front end: rules and diagnostics in machine formats.

Subcommands: nodes, rule, lobatto, radau, bary, selftest, bench.  Output is
CSV (default) or JSON lines on stdout, decimals printed with 17 significant
digits so a round-trip parse reproduces the binary values exactly.  Exit
codes: 0 success, 1 domain error (one-line diagnostic on stderr), 2 flag
errors (argparse).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

import numpy as np

from .core import Branch, JacobiParams
from .quadrature import BranchPolicy, compute_rule
from .extensions import FixedEnd, barycentric_weights, lobatto_rule, radau_rule
from . import tables

_FMT = "{:.16e}"

_BRANCH_TAGS = {
    Branch.ELEMENTARY: "elementary",
    Branch.BESSEL_RIGHT: "bessel",
    Branch.REFLECTED_ELEMENTARY: "reflected-elementary",
    Branch.REFLECTED_BESSEL: "reflected-bessel",
    Branch.RECURRENCE: "recurrence",
}


def _emit(rows, header, fmt):
    out = sys.stdout
    if fmt == "csv":
        out.write(",".join(header) + "\n")
        for row in rows:
            cells = [
                _FMT.format(v) if isinstance(v, float) else str(v) for v in row
            ]
            out.write(",".join(cells) + "\n")
    else:
        for row in rows:
            obj = {
                key: (_FMT.format(v) if isinstance(v, float) else v)
                for key, v in zip(header, row)
            }
            out.write(json.dumps(obj) + "\n")


def _policy_from_args(args) -> BranchPolicy:
    kwargs = {}
    if getattr(args, "method", None):
        kwargs["method"] = args.method
    if getattr(args, "refine", False):
        kwargs["newton_refine"] = True
    if getattr(args, "theta_switch", None) is not None:
        kwargs["theta_switch_nodes"] = args.theta_switch
    return BranchPolicy(**kwargs)


def _add_common(p, want_beta_default=None):
    p.add_argument("--n", type=int, required=True, help="number of nodes")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--method", choices=["auto", "elementary", "bessel",
                                        "recurrence"], default="auto")
    p.add_argument("--refine", action="store_true",
                   help="apply one Newton polish step per node")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--theta-switch", type=float, default=None,
                   help="expert override of the node branch boundary (rad)")


def _cmd_rule(args, nodes_only=False):
    params = JacobiParams(args.n, args.alpha, args.beta)
    policy = _policy_from_args(args)
    from .quadrature import compute_nodes, compute_weights

    node_set = compute_nodes(params, policy=policy)
    if nodes_only:
        rows = [
            (int(k), float(t), float(x), _BRANCH_TAGS[Branch(int(b))])
            for k, t, x, b in zip(node_set.k, node_set.theta, node_set.x,
                                  node_set.branch)
        ]
        _emit(rows, ["k", "theta", "x", "branch"], args.format)
        return 0
    w, om = compute_weights(params, node_set, policy=policy)
    rows = [
        (int(k), float(t), float(x), float(wi), float(omi),
         _BRANCH_TAGS[Branch(int(b))])
        for k, t, x, wi, omi, b in zip(
            node_set.k, node_set.theta, node_set.x, w, om, node_set.branch)
    ]
    _emit(rows, ["k", "theta", "x", "w", "omega", "branch"], args.format)
    return 0


def _cmd_lobatto(args):
    rule = lobatto_rule(args.alpha, args.beta, args.n,
                        policy=_policy_from_args(args))
    xs = rule.nodes
    ws = rule.weights
    thetas = np.arccos(np.clip(xs, -1.0, 1.0))
    rows = []
    for i, (x, w) in enumerate(zip(xs, ws)):
        tag = "boundary" if i in (0, len(xs) - 1) else "interior"
        rows.append((i, float(thetas[i]), float(x), float(w), 0.0, tag))
    _emit(rows, ["k", "theta", "x", "w", "omega", "branch"], args.format)
    return 0


def _cmd_radau(args):
    rule = radau_rule(args.alpha, args.beta, args.n,
                      fixed_end=FixedEnd(args.fixed_end),
                      policy=_policy_from_args(args))
    xs = rule.nodes
    ws = rule.weights
    thetas = np.arccos(np.clip(xs, -1.0, 1.0))
    bidx = 0 if rule.fixed_end is FixedEnd.LEFT else len(xs) - 1
    rows = []
    for i, (x, w) in enumerate(zip(xs, ws)):
        tag = "boundary" if i == bidx else "interior"
        rows.append((i, float(thetas[i]), float(x), float(w), 0.0, tag))
    _emit(rows, ["k", "theta", "x", "w", "omega", "branch"], args.format)
    return 0


def _cmd_bary(args):
    params = JacobiParams(args.n, args.alpha, args.beta)
    rule = compute_rule(params, policy=_policy_from_args(args))
    bw = barycentric_weights(rule)
    rows = [
        (i + 1, float(x), float(u)) for i, (x, u) in enumerate(zip(bw.nodes, bw.u))
    ]
    _emit(rows, ["k", "x", "u"], args.format)
    return 0


def _cmd_selftest(args):
    from . import selftest

    return selftest.run(verbose=True)


def _cmd_bench(args):
    n = args.n
    params = JacobiParams(n, args.alpha, args.beta)
    table = tables.default_table()
    results = []
    for method in ("elementary", "bessel"):
        policy = BranchPolicy(method=method)
        compute_rule(params, policy=policy, table=table)   # warm-up
        reps = max(1, 3_000_00 // n // 100)
        t0 = time.perf_counter()
        for _ in range(reps):
            compute_rule(params, policy=policy, table=table)
        dt = (time.perf_counter() - t0) / reps
        results.append((method, dt / n * 1e9))
    for method, ns in results:
        print(f"{method}: {ns:.0f} ns/node (nodes+weights, n={n})")
    auto = BranchPolicy()
    compute_rule(params, policy=auto, table=table)
    best = math.inf
    for _ in range(5):
        t0 = time.perf_counter()
        compute_rule(params, policy=auto, table=table)
        best = min(best, time.perf_counter() - t0)
    print(f"auto: {best / n * 1e9:.0f} ns/node (nodes+weights, n={n})")
    return 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="fastgj",
        description="Gauss-Jacobi quadrature by non-iterative asymptotics",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("nodes", help="nodes only")
    _add_common(p)
    p.set_defaults(func=lambda a: _cmd_rule(a, nodes_only=True))

    p = sub.add_parser("rule", help="full rule: nodes, weights, scaled weights")
    _add_common(p)
    p.set_defaults(func=_cmd_rule)

    p = sub.add_parser("lobatto", help="rule with both endpoints fixed")
    _add_common(p)
    p.set_defaults(func=_cmd_lobatto)

    p = sub.add_parser("radau", help="rule with one endpoint fixed")
    _add_common(p)
    p.add_argument("--fixed-end", choices=["left", "right"], default="left")
    p.set_defaults(func=_cmd_radau)

    p = sub.add_parser("bary", help="barycentric interpolation weights")
    _add_common(p)
    p.set_defaults(func=_cmd_bary)

    p = sub.add_parser("selftest", help="reference-value reproduction suite")
    p.set_defaults(func=_cmd_selftest)

    p = sub.add_parser("bench", help="per-branch timing")
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--alpha", type=float, default=0.1)
    p.add_argument("--beta", type=float, default=-0.3)
    p.set_defaults(func=_cmd_bench)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
