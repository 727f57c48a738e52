"""Command-line interface.

Subcommands:
  analyze            per-graph spectra, connectivity, packing, class flag
  certify            evaluate one catalog condition on each input graph
  sweep              corpus-wide consistency sweep (exit 1 on counterexample)
  search-outside-g   probe conditions on graphs outside the class
  gen                emit graphs from named or random families
  selftest           run the invariant battery
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import __version__
from .codec import encode_auto, parse_graph6
from .corpus import CorpusSpec, run_sweep, search_outside_g, thread_count
from .errors import SpectralGateError
from .generators import (
    complete_graph,
    cycle_graph,
    dumbbell_graph,
    gen_gnp,
    gen_random_multigraph,
    gen_random_regular,
    pappus_graph,
    path_graph,
    petersen_graph,
    spawn_seeds,
    star_graph,
)
from .theorems import catalog, evaluate, get_condition, profile_graph


def _read_lines(path: str) -> list[str]:
    if path == "-":
        return [ln.strip() for ln in sys.stdin if ln.strip()]
    with open(path, "r", encoding="utf-8") as fh:
        return [ln.strip() for ln in fh if ln.strip()]


def _cmd_analyze(args: argparse.Namespace) -> int:
    status = 0
    for lineno, line in enumerate(_read_lines(args.file), start=1):
        try:
            g = parse_graph6(line)
            p = profile_graph(g)
        except SpectralGateError as exc:
            print(json.dumps({"line": lineno, "error": str(exc)}), flush=True)
            status = 1
            continue
        out = {
            "graph": p.graph_id,
            "n": p.n,
            "m": p.m,
            "delta": p.delta,
            "Delta": p.Delta,
            "multiplicity": p.multiplicity,
            "kappa": p.kappa,
            "tau": None if p.tau == math.inf else p.tau,
            "lambda": list(p.summary.lam),
            "mu": list(p.summary.mu),
            "q": list(p.summary.q),
            "in_class": p.in_class,
        }
        print(json.dumps(out), flush=True)
    return status


def _cmd_certify(args: argparse.Namespace) -> int:
    spec = get_condition(args.condition)
    status = 0
    for lineno, line in enumerate(_read_lines(args.file), start=1):
        try:
            g = parse_graph6(line)
            verdict = evaluate(g, spec, args.k)
        except SpectralGateError as exc:
            print(json.dumps({"line": lineno, "error": str(exc)}), flush=True)
            status = 1
            continue
        print(json.dumps(verdict.as_dict()), flush=True)
        if not verdict.consistent:
            status = 1
    return status


def _write_report(report, args: argparse.Namespace) -> None:
    text = report.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if getattr(args, "csv", None):
        report.write_csv(args.csv)


def _cmd_sweep(args: argparse.Namespace) -> int:
    spec = CorpusSpec.from_file(args.spec)
    report = run_sweep(
        spec,
        conditions=args.condition or None,
        k_set=tuple(args.k),
        threads=args.threads,
        keep_records=not args.no_records,
    )
    _write_report(report, args)
    print(
        f"sweep: {report.counts['graphs_evaluated']} graphs, "
        f"{report.counts['counterexamples']} counterexamples, "
        f"{report.counts['parse_errors']} errors",
        file=sys.stderr,
    )
    return 0 if report.ok else 1


def _cmd_search(args: argparse.Namespace) -> int:
    spec = CorpusSpec.from_file(args.spec)
    report = search_outside_g(
        spec,
        conditions=args.condition or None,
        k_set=tuple(args.k),
        threads=args.threads,
        keep_records=not args.no_records,
    )
    _write_report(report, args)
    print(
        f"search: {report.counts['graphs_evaluated']} graphs outside the class, "
        f"{report.counts['hypothesis_fired']} hypotheses fired, "
        f"{report.counts['findings']} conclusion failures",
        file=sys.stderr,
    )
    return 0 if not report.errors else 1


def _cmd_gen(args: argparse.Namespace) -> int:
    named = {
        "complete": lambda: complete_graph(args.n),
        "cycle": lambda: cycle_graph(args.n),
        "path": lambda: path_graph(args.n),
        "star": lambda: star_graph(args.n),
        "petersen": petersen_graph,
        "pappus": pappus_graph,
        "dumbbell": dumbbell_graph,
    }
    if args.family in named:
        print(encode_auto(named[args.family]()))
        return 0
    seeds = spawn_seeds(args.seed, args.count)
    for child in seeds:
        if args.family == "regular":
            g = gen_random_regular(args.n, args.d, child)
        elif args.family == "gnp":
            g = gen_gnp(args.n, args.p, child)
        elif args.family == "multigraph":
            g = gen_random_multigraph(args.n, args.mult, args.edge_factor, child)
        else:
            raise SpectralGateError(f"unknown family {args.family!r}")
        print(encode_auto(g))
    return 0


def _cmd_selftest(args: argparse.Namespace) -> int:
    from .selftest import run_battery

    results = run_battery(quick=args.quick, threads=args.threads)
    width = max(len(r.name) for r in results)
    failed = 0
    for r in results:
        mark = "PASS" if r.ok else "FAIL"
        print(f"[{mark}] {r.name:<{width}}  {r.detail}  ({r.elapsed:.1f}s)")
        if not r.ok:
            failed += 1
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectral-gate",
        description="Certify edge-connectivity and tree-packing bounds from graph spectra.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="spectra, connectivity, packing, class flag per graph")
    p.add_argument("file", help="graph6/sparse6 file, or - for stdin")
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser("certify", help="evaluate one condition on each input graph")
    p.add_argument("file", help="graph6/sparse6 file, or - for stdin")
    p.add_argument("--k", type=int, required=True)
    p.add_argument(
        "--condition",
        required=True,
        metavar="ID",
        help="catalog id, e.g. " + ", ".join(s.id for s in catalog()[:3]) + ", ...",
    )
    p.set_defaults(fn=_cmd_certify)

    for name, fn, default_k in (("sweep", _cmd_sweep, (2, 3)), ("search-outside-g", _cmd_search, (2,))):
        p = sub.add_parser(name)
        p.add_argument("--spec", required=True, help="JSON corpus config")
        p.add_argument("--out", help="write the JSON report here (default stdout)")
        p.add_argument("--csv", help="also write per-graph records as CSV")
        p.add_argument("--condition", action="append", metavar="ID", help="restrict to these ids")
        p.add_argument("--k", type=int, nargs="+", default=list(default_k))
        p.add_argument("--threads", type=int, default=None, help=f"default {thread_count()}")
        p.add_argument("--no-records", action="store_true", help="omit per-graph records")
        p.set_defaults(fn=fn)

    p = sub.add_parser("gen", help="emit graph6/sparse6 lines for a family")
    p.add_argument(
        "--family",
        required=True,
        choices=[
            "complete", "cycle", "path", "star", "petersen", "pappus", "dumbbell",
            "regular", "gnp", "multigraph",
        ],
    )
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--mult", type=int, default=3)
    p.add_argument("--edge-factor", type=float, default=2.0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("selftest", help="run the invariant battery")
    p.add_argument("--quick", action="store_true")
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(fn=_cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except SpectralGateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
