"""Command-line interface.

Subcommands: turan (closed-form invariants), families (stream the extremal
family), verify (run checker campaigns), spectra (inspect one graph), and
search (hill-climb for the constrained spectral optimum).  Exit codes:
0 clean, 1 violations found, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from . import __version__
from .families import enumerate_family, turan_graph, turan_params
from .graph6 import Graph6Error, graph6_decode, graph6_encode
from .graphs import GraphError, is_isomorphic
from .harness import SuiteConfig, SuiteConfigError, extremal_search, run_suite
from .reporting import report_to_dict, write_report_bundle, write_report_json
from .spectra import coronal, join_radius_cap, join_radius_root, spectrum, spectral_radius


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list, got {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spectral-turan", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("turan", help="print the derived invariants of the extremal graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("families", help="stream the extremal family for (n, r)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--g6", action="store_true", help="print graph6 instead of edge lists")
    p.add_argument("--distinct", action="store_true", help="one representative per isomorphism class")

    p = sub.add_parser("verify", help="run verification campaigns")
    p.add_argument("--theorem", action="append", required=True, help="theorem id or 'all'; repeatable")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--exhaustive", type=int, metavar="N", help="all labeled graphs on N vertices")
    group.add_argument("--random", type=int, metavar="COUNT", help="random instances")
    group.add_argument("--input", metavar="FILE.g6", help="graph6 file, one graph per line")
    p.add_argument("--model", default=None, help="random model gnp:P or reg:D")
    p.add_argument("--n", type=int, default=None, help="vertex count for random mode")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--r", type=_int_list, default=(2,), help="comma-separated r values")
    p.add_argument("--s", type=_int_list, default=(1,), help="comma-separated apex counts")
    p.add_argument("--k", type=_int_list, default=(2,), help="comma-separated fold counts")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--tol", type=float, default=None, help="override the equality tolerance")
    p.add_argument("--json", metavar="PATH", default=None, help="write the JSON report here")
    p.add_argument("--report-dir", metavar="DIR", default=None,
                   help="write report.json, summary.csv, and figures here")

    p = sub.add_parser("spectra", help="inspect the spectrum of one graph6 graph")
    p.add_argument("--g6", required=True)
    p.add_argument("--coronal", type=float, default=None, metavar="X")
    p.add_argument("--join-s", type=int, default=None, metavar="S")

    p = sub.add_parser("search", help="hill-climb for the clique-capped spectral optimum")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--steps", type=int, default=10000)
    return parser


def _cmd_turan(args) -> int:
    params = turan_params(args.n, args.r)
    if args.json:
        print(json.dumps(dataclasses.asdict(params), indent=2, sort_keys=True))
    else:
        for name, value in dataclasses.asdict(params).items():
            print(f"{name:>6} = {value}")
    return 0


def _cmd_families(args) -> int:
    count = 0
    for g in enumerate_family(args.n, args.r, distinct=args.distinct):
        count += 1
        if args.g6:
            print(graph6_encode(g))
        else:
            print(f"n={g.n} edges={sorted(g.edges())}")
    print(f"# {count} member{'s' if count != 1 else ''}", file=sys.stderr)
    return 0


def _cmd_verify(args) -> int:
    if args.random is not None:
        mode, n, count = "random", args.n, args.random
        if args.model is None or args.n is None:
            print("random mode needs --model and --n", file=sys.stderr)
            return 2
    elif args.exhaustive is not None:
        mode, n, count = "exhaustive", args.exhaustive, None
    else:
        mode, n, count = "file", None, None
    config = SuiteConfig(
        theorems=tuple(args.theorem),
        mode=mode,
        n=n,
        count=count,
        model=args.model,
        seed=args.seed,
        path=args.input,
        r_values=args.r,
        s_values=args.s,
        k_values=args.k,
        tolerance=args.tol,
        workers=args.workers,
    )

    def sink(theorem, record):
        print(f"VIOLATION [{theorem}] {record['g6']} {record['residuals']} -- investigate", file=sys.stderr)

    report = run_suite(config, violation_sink=sink)
    if args.json:
        write_report_json(report, args.json)
    if args.report_dir:
        for path in write_report_bundle(report, args.report_dir):
            print(f"wrote {path}", file=sys.stderr)
    if not args.json and not args.report_dir:
        print(json.dumps(report_to_dict(report), indent=2, sort_keys=True))
    else:
        for res in report.results:
            print(
                f"{res.theorem}: instances={res.instances} holds={res.holds} "
                f"vacuous={res.vacuous} degenerate={res.degenerate} violations={len(res.violations)}"
            )
    return 1 if report.violation_count else 0


def _cmd_spectra(args) -> int:
    g = graph6_decode(args.g6)
    spec = spectrum(g)
    print(f"n = {g.n}, edges = {g.edge_count}")
    print("eigenvalues =", " ".join(f"{v:.10f}" for v in spec.values))
    if g.n:
        print(f"spectral radius = {spectral_radius(g):.12f}")
        print(f"least eigenvalue = {spec.values[0]:.12f}")
    if args.coronal is not None:
        print(f"coronal({args.coronal}) = {coronal(g, args.coronal):.12f}")
    if args.join_s is not None:
        root = join_radius_root(g, args.join_s)
        cap = join_radius_cap(g, args.join_s)
        print(f"join radius (s={args.join_s}) = {root:.12f}, cap = {cap:.12f}")
    return 0


def _cmd_search(args) -> int:
    best = extremal_search(args.n, args.r, args.seed, args.steps)
    lam = spectral_radius(best) if best.n else 0.0
    target_r = min(args.r, args.n)
    target = turan_params(args.n, target_r).lam0
    extremal = turan_graph(args.n, target_r)
    print(f"best graph: {graph6_encode(best)}")
    print(f"lambda = {lam:.10f}, extremal lambda = {target:.10f}")
    print(f"isomorphic to the extremal graph: {is_isomorphic(best, extremal)}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "turan": _cmd_turan,
        "families": _cmd_families,
        "verify": _cmd_verify,
        "spectra": _cmd_spectra,
        "search": _cmd_search,
    }
    try:
        return handlers[args.command](args)
    except (SuiteConfigError, Graph6Error, GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
