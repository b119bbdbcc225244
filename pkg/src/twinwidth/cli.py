"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 search budget exhausted.
"""
from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import io as tio
from .bounds import (
    best_upper_bound,
    lower_bound_min_symdiff,
    paley_sequence,
    theorem1_bound,
    theorem1_sequence,
    theorem2_bound,
    theorem2_sequence,
)
from .exact import DEFAULT_BUDGET, exact_solve
from .experiments import KINDS, ExperimentConfig, run_experiment
from .generators import DEFAULT_SEED, FAMILY_TAGS, GraphFamilySpec, family, paley
from .lattice import (
    LatticeQuery,
    binomial,
    count_crossing_paths,
    crossing_probability,
    crossing_probability_bound,
)
from .trigraph import SequenceError, apply_sequence

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _out(text: str, path: Optional[str]) -> None:
    if path and path != "-":
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    params = {}
    for key in ("n", "p", "q", "t", "rows", "cols", "seed"):
        val = getattr(args, key)
        if val is not None:
            params[key] = val
    if args.leaves is not None:
        params["leaves"] = [int(x) for x in args.leaves.split(",")]
    G = family(GraphFamilySpec(args.family, params))
    _out(tio.format_graph(G), args.out)
    return EXIT_OK


def cmd_bound(args) -> int:
    G = tio.read_graph(args.graph)
    n, m = len(G), G.num_edges()
    print(f"n={n} m={m}")
    if n >= 2:
        print(f"lower_bound={lower_bound_min_symdiff(G)}")
    if n >= 3:
        t1 = theorem1_sequence(G, args.seed)
        print(f"theorem1_width={t1.width} theorem1_formula={theorem1_bound(n):.4f} met={t1.bound_met}")
    if m >= 1:
        t2 = theorem2_sequence(G, args.seed)
        print(f"theorem2_width={t2.width} theorem2_formula={theorem2_bound(m):.4f} met={t2.bound_met}")
    best = best_upper_bound(G, args.seed)
    print(f"best_width={best.width} method={best.method}")
    if args.out:
        tio.write_certificate(best.sequence, args.out)
    return EXIT_OK


def cmd_exact(args) -> int:
    G = tio.read_graph(args.graph)
    r = exact_solve(G, args.budget)
    if r.value is None:
        print(f"unknown lower={r.lower} upper={r.upper} nodes={r.nodes}")
        return EXIT_BUDGET
    print(f"twin_width={r.value} nodes={r.nodes}")
    if args.out:
        tio.write_certificate(r.certificate, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    G = tio.read_graph(args.graph)
    seq = tio.read_certificate(args.seq)
    try:
        rep = apply_sequence(G, seq)
    except SequenceError as exc:
        print(f"invalid certificate: {exc}")
        return EXIT_FAIL
    print(f"width={rep.width} steps={len(seq)} remaining={len(rep.result)}")
    if args.claimed is not None and rep.width > args.claimed:
        print(f"width {rep.width} exceeds claimed bound {args.claimed}")
        return EXIT_FAIL
    if args.full and not rep.complete:
        print("sequence does not end at a single vertex")
        return EXIT_FAIL
    return EXIT_OK


def cmd_paley(args) -> int:
    b = paley_sequence(args.q)
    lower = lower_bound_min_symdiff(paley(args.q))
    half = (args.q - 1) // 2
    print(f"q={args.q} width={b.width} lower_bound={lower} (q-1)/2={half}")
    if args.out:
        tio.write_certificate(b.sequence, args.out)
    return EXIT_OK if b.width == lower == half else EXIT_FAIL


def cmd_lattice(args) -> int:
    q = LatticeQuery(args.a, args.b, args.t)
    print(f"paths={binomial(q.a + q.b, q.a)} crossing={count_crossing_paths(q)}")
    if q.t >= 1:
        exact = crossing_probability(q)
        bound = crossing_probability_bound(q)
        print(f"probability={exact} ({float(exact):.6g}) bound={bound} ({float(bound):.6g})")
        return EXIT_OK if exact <= bound else EXIT_FAIL
    return EXIT_OK


def cmd_experiment(args) -> int:
    config = ExperimentConfig(args.kind, args.n, args.p, args.epsilon, args.samples, args.seed)
    if args.out and args.out != "-":
        with open(args.out, "w", newline="") as fh:
            run_experiment(config, fh)
    else:
        run_experiment(config, sys.stdout)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="twinwidth", description="Twin-width bounds, certificates and experiments.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="write a graph file for a named family")
    g.add_argument("family", choices=FAMILY_TAGS)
    g.add_argument("--n", type=int)
    g.add_argument("--p", type=float)
    g.add_argument("--q", type=int)
    g.add_argument("--t", type=int)
    g.add_argument("--rows", type=int)
    g.add_argument("--cols", type=int)
    g.add_argument("--leaves", help="comma-separated leaf counts along the spine")
    g.add_argument("--seed", type=int)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    b = sub.add_parser("bound", help="lower bound and constructive upper bounds")
    b.add_argument("--graph", required=True)
    b.add_argument("--seed", type=int, default=DEFAULT_SEED)
    b.add_argument("--out", help="write the best certificate here")
    b.set_defaults(func=cmd_bound)

    e = sub.add_parser("exact", help="exact twin-width by branch and bound")
    e.add_argument("--graph", required=True)
    e.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    e.add_argument("--out")
    e.set_defaults(func=cmd_exact)

    v = sub.add_parser("verify", help="replay a certificate and report its width")
    v.add_argument("--graph", required=True)
    v.add_argument("--seq", required=True)
    v.add_argument("--claimed", type=int)
    v.add_argument("--full", action="store_true", help="require the sequence to end at one vertex")
    v.set_defaults(func=cmd_verify)

    p = sub.add_parser("paley", help="optimal certificate for a Paley graph")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_paley)

    lt = sub.add_parser("lattice", help="lattice-path crossing counts")
    lt.add_argument("--a", type=int, required=True)
    lt.add_argument("--b", type=int, required=True)
    lt.add_argument("--t", type=int, required=True)
    lt.set_defaults(func=cmd_lattice)

    x = sub.add_parser("experiment", help="Monte-Carlo sweep, CSV output")
    x.add_argument("--kind", choices=KINDS, required=True)
    x.add_argument("--n", type=int, nargs="+", required=True)
    x.add_argument("--p", default="0.5", help="0.3, n^-1.5 or 0.5/n")
    x.add_argument("--epsilon", type=float, default=0.1)
    x.add_argument("--samples", type=int, default=10)
    x.add_argument("--seed", type=int, default=DEFAULT_SEED)
    x.add_argument("--out")
    x.set_defaults(func=cmd_experiment)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"twinwidth {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
