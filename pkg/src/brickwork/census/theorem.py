"""Planar wheel-like bricks against odd wheels, simple and with parallel edges."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from ..canon import canonical_graph, is_isomorphic
from ..cuts import BudgetExceeded, is_brick
from ..graph import MultiGraph, add_parallel, odd_wheel, parallel_classes, underlying_simple
from ..matching import MatchingOverflow, is_matching_covered
from ..planarity import is_planar
from ..removable import wheel_like_hubs
from .analysis import canonical_string
from .parallel import parallel_map


def odd_wheel_centres(G: MultiGraph) -> tuple[int, ...]:
    """Vertices that can serve as the hub when the underlying simple graph
    is an odd wheel (all four for K4); empty otherwise."""
    k = G.n - 1
    if k < 3 or k % 2 == 0:
        return ()
    S = underlying_simple(G)
    if not is_isomorphic(S, odd_wheel(k)):
        return ()
    return tuple(v for v in range(G.n) if len(S.neighbors(v)) == k)


@dataclass(frozen=True)
class GraphVerdict:
    canonical: str
    planar_brick: bool
    wheel_like: bool
    hubs: tuple[int, ...] = ()
    problem: str | None = None
    skipped: str | None = None


def check_graph(G: MultiGraph) -> GraphVerdict:
    """If ``G`` is a planar wheel-like brick, its underlying simple graph must
    be an odd wheel and every hub must be a centre of that wheel meeting
    every parallel class."""
    canon = canonical_string(G)
    try:
        if not is_matching_covered(G) or not is_planar(G) or not is_brick(G):
            return GraphVerdict(canon, False, False)
        hubs = wheel_like_hubs(G)
    except (MatchingOverflow, BudgetExceeded) as exc:
        return GraphVerdict(canon, False, False, skipped=str(exc))
    if not hubs:
        return GraphVerdict(canon, True, False)
    centres = odd_wheel_centres(G)
    if not centres:
        return GraphVerdict(canon, True, True, hubs, "underlying simple graph is not an odd wheel")
    for h in hubs:
        if h not in centres:
            return GraphVerdict(canon, True, True, hubs, f"hub {h} is not a wheel centre")
        for cls in parallel_classes(G):
            if h not in G.ends(cls[0]):
                return GraphVerdict(canon, True, True, hubs, f"parallel class {list(cls)} misses hub {h}")
    return GraphVerdict(canon, True, True, hubs)


@dataclass
class MainTheoremVerdict:
    checked: int = 0
    planar_bricks: int = 0
    wheel_like: list[str] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)
    skipped: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    @property
    def complete(self) -> bool:
        return not self.skipped

    def absorb(self, v: GraphVerdict) -> None:
        self.checked += 1
        if v.skipped:
            self.skipped.append({"graph": v.canonical, "reason": v.skipped})
            return
        self.planar_bricks += v.planar_brick
        if v.wheel_like:
            self.wheel_like.append(v.canonical)
        if v.problem:
            self.counterexamples.append({"graph": v.canonical, "hubs": list(v.hubs), "problem": v.problem})

    def summary(self) -> dict:
        return {
            "checked": self.checked,
            "planar_bricks": self.planar_bricks,
            "wheel_like": sorted(self.wheel_like),
            "counterexamples": self.counterexamples,
            "skipped": self.skipped,
            "passed": self.passed,
            "complete": self.complete,
        }


def verify_main_theorem(graphs: Iterable[MultiGraph], workers: int = 1) -> MainTheoremVerdict:
    """Check every graph of the stream; results are merged in canonical order."""
    verdicts = parallel_map(check_graph, list(graphs), workers)
    out = MainTheoremVerdict()
    for v in sorted(verdicts, key=lambda v: (len(v.canonical), v.canonical)):
        out.absorb(v)
    return out


# -- parallel edge variants -----------------------------------------------------

def hub_spoke_doublings(G: MultiGraph, hub: int) -> list[MultiGraph]:
    """Double every nonempty set of edges at ``hub`` (multiplicity at most 2)."""
    star = sorted(G.incident(hub))
    out = []
    for k in range(1, len(star) + 1):
        for chosen in combinations(star, k):
            H = G
            for eid in chosen:
                H = add_parallel(H, eid)
            out.append(H)
    return out


def single_edge_doublings(G: MultiGraph) -> list[MultiGraph]:
    return [add_parallel(G, eid) for eid in sorted(G.edge_ids)]


def rim_doublings(G: MultiGraph, hub: int) -> list[MultiGraph]:
    """Double one edge missing ``hub``."""
    return [add_parallel(G, e.id) for e in G.edges if hub not in (e.u, e.v)]


def _dedup(graphs: Iterable[MultiGraph]) -> list[MultiGraph]:
    seen = {}
    for H in graphs:
        C = canonical_graph(H)
        seen.setdefault(canonical_string(C), C)
    return [seen[k] for k in sorted(seen, key=lambda s: (len(s), s))]


@dataclass
class MultigraphVerdict:
    base: list[str] = field(default_factory=list)
    hub_variants: int = 0
    rim_variants: int = 0
    hub_variant_failures: list[dict] = field(default_factory=list)
    rim_variant_failures: list[dict] = field(default_factory=list)
    theorem: MainTheoremVerdict = field(default_factory=MainTheoremVerdict)

    @property
    def passed(self) -> bool:
        return not (self.hub_variant_failures or self.rim_variant_failures) and self.theorem.passed

    def summary(self) -> dict:
        return {
            "base": self.base,
            "hub_variants": self.hub_variants,
            "rim_variants": self.rim_variants,
            "hub_variant_failures": self.hub_variant_failures,
            "rim_variant_failures": self.rim_variant_failures,
            "theorem": self.theorem.summary(),
            "passed": self.passed,
        }


def verify_multigraph_clause(bricks: Iterable[MultiGraph], workers: int = 1) -> MultigraphVerdict:
    """Parallel-edge variants of wheel-like bricks.

    For each hub, every hub-spoke doubling must stay wheel-like with all
    parallel classes at a hub; one doubled edge away from the hub must never
    give a wheel-like brick with a parallel class missing its hubs. All
    variants, plus every single-edge doubling, also go through ``check_graph``.
    """
    out = MultigraphVerdict()
    hub_vars, rim_vars, singles = [], [], []
    for B in bricks:
        out.base.append(canonical_string(B))
        for h in wheel_like_hubs(B):
            hub_vars.extend(hub_spoke_doublings(B, h))
            rim_vars.extend(rim_doublings(B, h))
        singles.extend(single_edge_doublings(B))
    hub_vars, rim_vars = _dedup(hub_vars), _dedup(rim_vars)
    out.hub_variants, out.rim_variants = len(hub_vars), len(rim_vars)
    hub_res = parallel_map(check_graph, hub_vars, workers)
    rim_res = parallel_map(check_graph, rim_vars, workers)
    for v in hub_res:
        if v.skipped:
            continue
        if not v.wheel_like or v.problem:
            out.hub_variant_failures.append(
                {"graph": v.canonical, "wheel_like": v.wheel_like, "problem": v.problem})
    for v in rim_res:
        if v.wheel_like and v.problem:
            out.rim_variant_failures.append({"graph": v.canonical, "problem": v.problem})
    merged = {v.canonical: v for v in hub_res + rim_res}
    for v in parallel_map(check_graph, [S for S in _dedup(singles)
                                         if canonical_string(S) not in merged], workers):
        merged[v.canonical] = v
    for key in sorted(merged, key=lambda s: (len(s), s)):
        out.theorem.absorb(merged[key])
    return out
