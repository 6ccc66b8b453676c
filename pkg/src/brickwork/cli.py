"""Command line front end.

Exit codes: 0 success, 1 a verification suite found a counterexample,
2 bad input or usage, 3 a suite skipped work because of a budget and so
cannot vouch for completeness.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import cuts, matching
from .graph import NAMED_GRAPHS, GraphError, MultiGraph, SpliceMap, named_graph, odd_wheel, splice, wheel
from .io import (
    GraphFormatError,
    UnsupportedFormatError,
    emit_dot,
    emit_edge_list,
    emit_graph6,
    emit_sparse6,
    parse_edge_list,
    read_graph6_stream,
)

EXIT_OK, EXIT_FALSIFIED, EXIT_USAGE, EXIT_INCOMPLETE = 0, 1, 2, 3
SUITE_NAMES = ("main-theorem", "wiwj", "delta-bound", "lemmas", "engines", "all")


class UsageError(Exception):
    pass


# -- graph specs and I/O -----------------------------------------------------

def graph_from_spec(spec: str) -> MultiGraph:
    """``k4``, ``c6bar``, ``r8``, ``w5``, ``w7``, ``wheel:K`` or ``oddwheel:K:m0,m1,...``."""
    s = spec.strip().lower()
    if s in NAMED_GRAPHS:
        return named_graph(s)
    parts = s.split(":")
    try:
        if parts[0] == "wheel" and len(parts) == 2:
            return wheel(int(parts[1]))
        if parts[0] == "oddwheel" and len(parts) in (2, 3):
            k = int(parts[1])
            mult = [int(x) for x in parts[2].split(",")] if len(parts) == 3 else None
            return odd_wheel(k, mult)
    except (ValueError, GraphError) as exc:
        raise UsageError(f"bad graph spec {spec!r}: {exc}") from None
    raise UsageError(f"unknown graph spec {spec!r}; try one of {', '.join(NAMED_GRAPHS)}, wheel:K, oddwheel:K")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii") as fh:
        return fh.read()


def read_graphs(path: str, fmt: str) -> list[MultiGraph]:
    text = _read_text(path)
    if fmt == "edgelist":
        return [parse_edge_list(text)]
    graphs = list(read_graph6_stream(text.splitlines()))
    if not graphs:
        raise GraphFormatError("no graph in input", 0)
    return graphs


def format_graph(G: MultiGraph, fmt: str, annotate: bool = False) -> str:
    if fmt == "g6":
        return emit_graph6(G) + "\n"
    if fmt == "s6":
        return emit_sparse6(G) + "\n"
    if fmt == "edgelist":
        return emit_edge_list(G)
    if fmt == "dot":
        groups: list[tuple[int, ...]] = []
        if annotate:
            from .removable import removable_classes
            from .matching import is_matching_covered

            if is_matching_covered(G):
                groups = [c.edges for c in removable_classes(G)]
        return emit_dot(G, groups)
    raise UsageError(f"unknown output format {fmt!r}")


# -- subcommands -----------------------------------------------------------------

def cmd_analyze(args) -> int:
    from .census.analysis import analyze, reports_to_csv, to_json

    if args.gen:
        graphs = [graph_from_spec(args.gen)]
    else:
        graphs = read_graphs(args.path, args.format)
    if args.output == "dot":
        for G in graphs:
            sys.stdout.write(format_graph(G, "dot", annotate=True))
        return EXIT_OK
    reports = [analyze(G, args.solid_max_n) for G in graphs]
    if args.output == "csv":
        sys.stdout.write(reports_to_csv(reports))
    else:
        payload = [r.to_dict(with_timings=args.timings) for r in reports]
        sys.stdout.write(to_json(payload[0] if len(payload) == 1 else payload))
    return EXIT_OK


def _stream(args) -> list[MultiGraph]:
    if args.source:
        return read_graphs(args.source, args.format)
    from .census.suites import corpus

    return list(corpus(args.max_n))


def run_suites(args) -> dict:
    """The JSON report for ``verify``; deterministic for a fixed configuration."""
    from .census import suites
    from .census.theorem import verify_main_theorem, verify_multigraph_clause
    from .census.wheels import wheel_splice_census

    wanted = SUITE_NAMES[:-1] if args.suite == "all" else (args.suite,)
    out: dict = {"suites": {}}
    stream = None

    def get_stream():
        nonlocal stream
        if stream is None:
            stream = _stream(args)
        return stream

    if "main-theorem" in wanted:
        mt = verify_main_theorem(get_stream(), args.workers)
        from .io import parse_any

        found = [parse_any(s) for s in sorted(mt.wheel_like)]
        mg = verify_multigraph_clause(found, args.workers)
        out["suites"]["main-theorem"] = {
            "simple": mt.summary(),
            "multigraph": mg.summary(),
            "passed": mt.passed and mg.passed,
            "complete": mt.complete and mg.theorem.complete,
        }
    if "wiwj" in wanted:
        sizes = tuple(range(3, args.max_wheel + 1, 2))
        v = wheel_splice_census(sizes, workers=args.workers)
        out["suites"]["wiwj"] = dict(v.summary(), sizes=list(sizes), complete=True)
    if "delta-bound" in wanted:
        bricks = [G for G in get_stream() if cuts.is_brick(G)]
        out["suites"]["delta-bound"] = suites.delta_bound(bricks).summary()
    if "lemmas" in wanted:
        results = suites.lemma_suites(args.max_n, args.solid_max_n)
        out["suites"]["lemmas"] = {
            "suites": [r.summary() for r in results],
            "passed": all(r.passed for r in results),
            "complete": all(r.complete for r in results),
        }
    if "engines" in wanted:
        graphs = read_graphs(args.source, args.format) if args.source else suites.engine_corpus(args.max_n)
        results = suites.engine_suites(graphs)
        out["suites"]["engines"] = {
            "suites": [r.summary() for r in results],
            "passed": all(r.passed for r in results),
            "complete": True,
        }
    out["passed"] = all(s["passed"] for s in out["suites"].values())
    out["complete"] = all(s.get("complete", True) for s in out["suites"].values())
    return out


def cmd_verify(args) -> int:
    from .census.analysis import to_json

    report = run_suites(args)
    text = to_json(report)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for name, s in report["suites"].items():
        state = "pass" if s["passed"] else "FAIL"
        if s["passed"] and not s.get("complete", True):
            state = "incomplete"
        print(f"{name}: {state}", file=sys.stderr)
    if not report["passed"]:
        return EXIT_FALSIFIED
    if not report["complete"]:
        return EXIT_INCOMPLETE
    return EXIT_OK


def _vertex_spec(text: str) -> tuple[MultiGraph, int]:
    spec, _, vertex = text.rpartition(":")
    if not spec:
        raise UsageError(f"expected GRAPH:VERTEX, got {text!r}")
    G = graph_from_spec(spec)
    try:
        v = int(vertex)
    except ValueError:
        raise UsageError(f"bad vertex in {text!r}") from None
    if not 0 <= v < G.n:
        raise UsageError(f"vertex {v} out of range for {spec} ({G.n} vertices)")
    return G, v


def cmd_splice(args) -> int:
    G, u = _vertex_spec(args.a)
    H, v = _vertex_spec(args.b)
    if G.degree(u) != H.degree(v):
        raise UsageError(f"degree mismatch: d_G({u})={G.degree(u)}, d_H({v})={H.degree(v)}")
    gs, hs = sorted(G.incident(u)), sorted(H.incident(v))
    if args.theta:
        try:
            pairs = [tuple(int(x) for x in p.split(":")) for p in args.theta.split(",")]
            theta = tuple((gs[i], hs[j]) for i, j in pairs)
        except (ValueError, IndexError):
            raise UsageError(f"bad --theta {args.theta!r}; use i:j,... with positions in each star") from None
    else:
        theta = tuple(zip(gs, hs))
    try:
        W = splice(G, H, SpliceMap(u, v, theta))
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(format_graph(W, args.output, args.annotate))
    return EXIT_OK


def cmd_gen(args) -> int:
    spec = args.name if args.k is None else f"{args.name}:{args.k}"
    sys.stdout.write(format_graph(graph_from_spec(spec), args.output, args.annotate))
    return EXIT_OK


def cmd_convert(args) -> int:
    fmt = "edgelist" if args.in_format == "edgelist" else "graph6"
    for G in read_graphs(args.path, fmt):
        sys.stdout.write(format_graph(G, args.out_format, args.annotate))
    return EXIT_OK


# -- parser --------------------------------------------------------------------

def _positive(text: str) -> int:
    x = int(text)
    if x < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return x


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="brickwork", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--pm-cap", type=_positive, default=None,
                   help="perfect matching enumeration cap (env BRICKWORK_PM_CAP)")
    p.add_argument("--solid-max-n", type=_positive, default=None,
                   help="largest order for solidity and robust-cut searches (env BRICKWORK_SOLID_MAX_N)")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="report every predicate for one graph or a graph6 stream")
    a.add_argument("path", nargs="?", default="-", help="input file, '-' for stdin")
    a.add_argument("--gen", help="analyze a built-in graph instead of reading input")
    a.add_argument("--format", choices=("graph6", "edgelist"), default="graph6",
                   help="input format; graph6 also accepts sparse6 lines")
    a.add_argument("--output", choices=("json", "csv", "dot"), default="json")
    a.add_argument("--timings", action="store_true", help="include per-field timings in JSON")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True, help=f"one of {', '.join(SUITE_NAMES)}")
    v.add_argument("--max-n", type=_positive, default=8, help="largest order of the built-in corpus")
    v.add_argument("--max-wheel", type=_positive, default=7, help="largest rim length in the wheel splice family")
    v.add_argument("--from", dest="source", help="graph6/sparse6 stream to use instead of the corpus")
    v.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    v.add_argument("--workers", type=_positive, default=1)
    v.add_argument("--report", help="write the JSON report here instead of stdout")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("splice", help="splice two graphs")
    s.add_argument("--a", required=True, help="GRAPH:VERTEX, e.g. k4:0")
    s.add_argument("--b", required=True, help="GRAPH:VERTEX")
    s.add_argument("--theta", help="i:j,... pairing the i-th edge at a with the j-th edge at b (edge id order)")
    s.add_argument("--output", choices=("edgelist", "g6", "s6", "dot"), default="edgelist")
    s.add_argument("--annotate", action="store_true", help="colour removable classes in DOT output")
    s.set_defaults(func=cmd_splice)

    g = sub.add_parser("gen", help="print a built-in graph")
    g.add_argument("name", help="k4, c6bar, r8, w5, w7, or 'wheel K'")
    g.add_argument("k", nargs="?", type=int)
    g.add_argument("--output", choices=("edgelist", "g6", "s6", "dot"), default="edgelist")
    g.add_argument("--annotate", action="store_true")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("convert", help="convert between graph formats")
    c.add_argument("path", nargs="?", default="-")
    c.add_argument("--in", dest="in_format", choices=("g6", "s6", "edgelist"), required=True)
    c.add_argument("--out", dest="out_format", choices=("g6", "s6", "edgelist", "dot"), required=True)
    c.add_argument("--annotate", action="store_true")
    c.set_defaults(func=cmd_convert)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.pm_cap:
        matching.set_pm_cap(args.pm_cap)
    if args.solid_max_n:
        cuts.DEFAULT_SOLID_MAX_N = args.solid_max_n
    if args.command == "verify" and args.suite not in SUITE_NAMES:
        print(f"unknown suite {args.suite!r}; choose from {', '.join(SUITE_NAMES)}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (GraphFormatError, UnsupportedFormatError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
