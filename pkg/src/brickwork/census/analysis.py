"""One row of facts per graph, and deterministic CSV / JSON writers."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import asdict, dataclass, field
from typing import Iterable

from ..canon import canonical_graph
from ..cuts import BudgetExceeded, brick_count, find_robust_cut, is_brace, is_brick, is_solid
from ..graph import MultiGraph, is_bipartite
from ..io import emit_graph6, emit_sparse6
from ..matching import MatchingOverflow, is_matching_covered
from ..planarity import is_planar
from ..removable import is_near_bipartite, removable_classes, wheel_like_hubs


def canonical_string(G: MultiGraph) -> str:
    """graph6 of the canonical relabelling, sparse6 for multigraphs."""
    C = canonical_graph(G)
    return emit_graph6(C) if C.is_simple() else emit_sparse6(C)


@dataclass
class AnalysisReport:
    canonical: str
    n: int
    m: int
    max_degree: int
    matching_covered: bool
    bipartite: bool
    brick: bool
    brace: bool
    planar: bool
    solid: bool | None = None
    near_bipartite: bool | None = None
    wheel_like: bool | None = None
    hubs: tuple[int, ...] = ()
    removable_edges: tuple[int, ...] = ()
    removable_doubletons: tuple[tuple[int, int], ...] = ()
    brick_count: int | None = None
    robust_cut: bool | None = None
    # fields that were not computed and why, e.g. "solid: 14 vertices exceeds bound 12"
    refusals: tuple[str, ...] = ()
    timings: dict[str, float] = field(default_factory=dict, compare=False)

    @property
    def removable_class_count(self) -> int:
        return len(self.removable_edges) + len(self.removable_doubletons)

    def to_dict(self, with_timings: bool = False) -> dict:
        d = asdict(self)
        d["hubs"] = list(self.hubs)
        d["removable_edges"] = list(self.removable_edges)
        d["removable_doubletons"] = [list(p) for p in self.removable_doubletons]
        d["refusals"] = list(self.refusals)
        if not with_timings:
            del d["timings"]
        return d


def analyze(G: MultiGraph, solid_max_n: int | None = None) -> AnalysisReport:
    """Run every predicate on ``G`` itself (its own labels and edge ids).

    Budget refusals leave the field as None and are listed in ``refusals``.
    """
    timings: dict[str, float] = {}
    refusals: list[str] = []

    def timed(name, fn, *args):
        t0 = time.perf_counter()
        try:
            return fn(*args)
        except (BudgetExceeded, MatchingOverflow) as exc:
            refusals.append(f"{name}: {exc}")
            return None
        finally:
            timings[name] = time.perf_counter() - t0

    mc = timed("matching_covered", is_matching_covered, G)
    bip = is_bipartite(G)
    brick = bool(mc) and timed("brick", is_brick, G)
    brace = bool(mc) and bip and timed("brace", is_brace, G)
    report = AnalysisReport(
        canonical=canonical_string(G),
        n=G.n,
        m=G.m,
        max_degree=G.max_degree(),
        matching_covered=bool(mc),
        bipartite=bip,
        brick=bool(brick),
        brace=bool(brace),
        planar=timed("planar", is_planar, G),
    )
    if mc:
        classes = timed("removable", removable_classes, G)
        if classes is not None:
            report.removable_edges = tuple(c.edges[0] for c in classes if not c.is_doubleton)
            report.removable_doubletons = tuple(c.edges for c in classes if c.is_doubleton)
        report.brick_count = timed("brick_count", brick_count, G)
        report.near_bipartite = timed("near_bipartite", is_near_bipartite, G) is not None
    if brick:
        report.hubs = timed("hubs", wheel_like_hubs, G) or ()
        report.wheel_like = bool(report.hubs)
        report.solid = timed("solid", is_solid, G, solid_max_n)
        if report.solid is False:
            report.robust_cut = timed("robust_cut", find_robust_cut, G, solid_max_n) is not None
        elif report.solid:
            report.robust_cut = False
    elif mc:
        report.wheel_like = False
    report.refusals = tuple(refusals)
    report.timings = timings
    return report


CSV_FIELDS = (
    "canonical", "n", "m", "max_degree", "matching_covered", "bipartite", "brick", "brace",
    "planar", "solid", "near_bipartite", "wheel_like", "hubs", "removable_edges",
    "removable_doubletons", "brick_count", "robust_cut", "refusals",
)


def _cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "1" if x else "0"
    if isinstance(x, (tuple, list)):
        return " ".join("-".join(map(str, y)) if isinstance(y, (tuple, list)) else str(y) for y in x)
    return str(x)


def reports_to_csv(reports: Iterable[AnalysisReport]) -> str:
    """CSV without timings, so equal inputs give equal bytes."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in reports:
        d = r.to_dict()
        w.writerow([_cell(d[k]) for k in CSV_FIELDS])
    return buf.getvalue()


def to_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
