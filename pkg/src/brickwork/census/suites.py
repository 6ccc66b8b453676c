"""Exhaustive property suites over the small-graph corpus.

Every verdict here comes from the library predicates; the suites only pick
the graphs that satisfy a statement's hypotheses and compare.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable

from ..canon import is_isomorphic
from ..cuts import (
    BudgetExceeded,
    brick_count,
    contractions,
    find_robust_cut,
    is_brick,
    is_solid,
    robust_refinement,
    separating_cuts,
)
from ..graph import (
    MultiGraph,
    SpliceMap,
    add_parallel,
    complement,
    contract,
    edge_cut,
    named_graph,
    odd_wheel,
    splice,
)
from ..io import emit_graph6, emit_sparse6, parse_any
from ..matching import (
    barriers,
    has_perfect_matching,
    is_forbidden,
    is_matching_covered,
    max_matching,
    max_matching_exhaustive,
)
from ..planarity import is_planar
from ..removable import (
    has_two_nonadjacent_removable_edges,
    is_near_bipartite,
    is_removable_edge,
    removable_classes,
    removable_doubletons,
    removable_edges,
    triangle_condition,
    wheel_like_hubs,
)
from .analysis import canonical_string
from .generate import generate_connected_graphs
from .theorem import odd_wheel_centres
from .wheels import wheel_splice_instances


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[dict] = field(default_factory=list)
    skipped: list[dict] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def complete(self) -> bool:
        return not self.skipped

    def fail(self, G: MultiGraph, **info) -> None:
        self.failures.append(dict(graph=canonical_string(G), **info))

    def summary(self) -> dict:
        return {
            "name": self.name,
            "checked": self.checked,
            "failures": self.failures,
            "skipped": self.skipped,
            "data": self.data,
            "passed": self.passed,
            "complete": self.complete,
        }


# -- corpus ----------------------------------------------------------------------

@lru_cache(maxsize=None)
def corpus(max_n: int = 8) -> tuple[MultiGraph, ...]:
    """All connected simple graphs on 1..max_n vertices."""
    return tuple(G for n in range(1, max_n + 1) for G in generate_connected_graphs(n))


@lru_cache(maxsize=None)
def corpus_bricks(max_n: int = 8) -> tuple[MultiGraph, ...]:
    return tuple(G for G in corpus(max_n) if G.n % 2 == 0 and is_brick(G))


def engine_corpus(max_n: int = 8, random_graphs: int = 2000, seed: int = 11) -> tuple[MultiGraph, ...]:
    """The corpus plus graphs on 9 and 10 vertices: every distinct splice of
    two odd wheels with at most 10 vertices and seeded random graphs."""
    out = list(corpus(max_n))
    seen = set()
    for inst in wheel_splice_instances((3, 5)):
        W = inst.graph
        if W.n <= 10:
            key = canonical_string(W)
            if key not in seen:
                seen.add(key)
                out.append(W)
    rng = random.Random(seed)
    for _ in range(random_graphs):
        n = rng.choice((9, 10))
        p = rng.uniform(0.2, 0.7)
        pairs = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p]
        out.append(MultiGraph.from_pairs(n, pairs))
    return tuple(out)


def _named(name: str) -> MultiGraph:
    return named_graph(name)


def _iso_any(G: MultiGraph, names: Iterable[str]) -> str | None:
    for name in names:
        H = _named(name)
        if H.n == G.n and H.m == G.m and is_isomorphic(G, H):
            return name
    return None


# -- individual suites -------------------------------------------------------------

def delta_bound(bricks: Iterable[MultiGraph]) -> SuiteResult:
    """Every brick has at least as many removable classes as its maximum degree."""
    res = SuiteResult("delta-bound")
    minima: dict[int, int] = {}
    for G in bricks:
        res.checked += 1
        k = len(removable_classes(G))
        minima[G.n] = min(minima.get(G.n, k), len(removable_edges(G)))
        if k < G.max_degree():
            res.fail(G, classes=k, max_degree=G.max_degree())
    # observed minimum number of removable edges per order, reported as data only
    res.data["min_removable_edges_by_n"] = {str(n): minima[n] for n in sorted(minima)}
    return res


def barrier_forbidden(graphs: Iterable[MultiGraph]) -> SuiteResult:
    """An edge is forbidden iff some barrier contains both of its ends."""
    res = SuiteResult("barrier-forbidden")
    for G in graphs:
        if G.n % 2 or G.n < 2 or not has_perfect_matching(G):
            continue
        res.checked += 1
        bars = barriers(G)
        for e in G.edges:
            via_barrier = any(e.u in B and e.v in B for B in bars)
            if via_barrier != is_forbidden(G, e.id):
                res.fail(G, edge=e.id, barrier=via_barrier)
    return res


def _random_splice(rng: random.Random, pool: list[MultiGraph]) -> tuple[MultiGraph, MultiGraph, SpliceMap] | None:
    G, H = rng.choice(pool), rng.choice(pool)
    u = rng.randrange(G.n)
    cands = [v for v in range(H.n) if H.degree(v) == G.degree(u)]
    if not cands:
        return None
    v = rng.choice(cands)
    gs, hs = sorted(G.incident(u)), sorted(H.incident(v))
    rng.shuffle(hs)
    return G, H, SpliceMap(u, v, tuple(zip(gs, hs)))


def _splice_pool(max_n: int) -> list[MultiGraph]:
    pool = [G for G in corpus(max_n) if is_matching_covered(G)]
    # a few graphs with parallel edges so multigraph splices occur too
    pool += [odd_wheel(5, (2, 1, 1, 1, 1)), odd_wheel(3, (2, 2, 1)), add_parallel(_named("c6bar"), 0)]
    return pool


def splicing_preserves_mc(instances: int = 1000, seed: int = 20240917, max_n: int = 6) -> SuiteResult:
    """Random splices of matching covered graphs are matching covered."""
    res = SuiteResult("splice-matching-covered")
    rng = random.Random(seed)
    pool = _splice_pool(max_n)
    while res.checked < instances:
        got = _random_splice(rng, pool)
        if got is None:
            continue
        G, H, smap = got
        res.checked += 1
        W = splice(G, H, smap)
        if not is_matching_covered(W):
            res.failures.append({
                "G": canonical_string(G), "H": canonical_string(H),
                "u": smap.u, "v": smap.v, "theta": [list(p) for p in smap.theta],
            })
    res.data["seed"] = seed
    return res


def nonadjacent_removables(bricks: Iterable[MultiGraph]) -> SuiteResult:
    """Simple near-bipartite bricks other than K4, C6bar and R8 have two
    nonadjacent removable edges; the graphs that lack them are recorded."""
    res = SuiteResult("near-bipartite-nonadjacent-removables")
    lacking = []
    for G in bricks:
        if not G.is_simple() or is_near_bipartite(G) is None:
            continue
        res.checked += 1
        if has_two_nonadjacent_removable_edges(G) is None:
            name = _iso_any(G, ("k4", "c6bar", "r8"))
            lacking.append(name or canonical_string(G))
            if name is None:
                res.fail(G)
    res.data["lacking"] = sorted(lacking)
    return res


def near_bipartite_wheel_like(bricks: Iterable[MultiGraph]) -> SuiteResult:
    """A simple near-bipartite brick is wheel-like iff it is K4."""
    res = SuiteResult("near-bipartite-wheel-like")
    for G in bricks:
        if not G.is_simple() or is_near_bipartite(G) is None:
            continue
        res.checked += 1
        if bool(wheel_like_hubs(G)) != (_iso_any(G, ("k4",)) is not None):
            res.fail(G, wheel_like=bool(wheel_like_hubs(G)))
    return res


def robust_cut_exists(bricks: Iterable[MultiGraph], max_n: int | None = None) -> SuiteResult:
    res = SuiteResult("robust-cut-exists")
    for G in bricks:
        try:
            if is_solid(G, max_n):
                continue
            res.checked += 1
            if find_robust_cut(G, max_n) is None:
                res.fail(G)
        except BudgetExceeded as exc:
            res.skipped.append({"graph": canonical_string(G), "reason": str(exc)})
    return res


def six_vertex_bricks(bricks: Iterable[MultiGraph]) -> SuiteResult:
    """A simple brick on six vertices is nonsolid or W5; if planar, it is
    wheel-like exactly when it is W5."""
    res = SuiteResult("six-vertex-bricks")
    for G in bricks:
        if G.n != 6 or not G.is_simple():
            continue
        res.checked += 1
        w5 = _iso_any(G, ("w5",)) is not None
        if is_solid(G) and not w5:
            res.fail(G, reason="solid but not W5")
        if is_planar(G) and bool(wheel_like_hubs(G)) != w5:
            res.fail(G, reason="planar wheel-like status disagrees with being W5")
    return res


def planar_solid_odd_wheels(bricks: Iterable[MultiGraph], max_n: int | None = None) -> SuiteResult:
    res = SuiteResult("planar-solid-odd-wheel")
    for G in bricks:
        if not G.is_simple() or not is_planar(G):
            continue
        try:
            solid = is_solid(G, max_n)
        except BudgetExceeded as exc:
            res.skipped.append({"graph": canonical_string(G), "reason": str(exc)})
            continue
        if not solid:
            continue
        res.checked += 1
        if not odd_wheel_centres(G):
            res.fail(G)
    return res


def contraction_planarity(bricks: Iterable[MultiGraph], max_n: int | None = None) -> SuiteResult:
    """Both contractions of a planar brick along a separating cut are planar."""
    res = SuiteResult("separating-contractions-planar")
    for G in bricks:
        if not is_planar(G):
            continue
        try:
            reports = separating_cuts(G, max_n)
        except BudgetExceeded as exc:
            res.skipped.append({"graph": canonical_string(G), "reason": str(exc)})
            continue
        for rep in reports:
            res.checked += 1
            a, b = contractions(G, rep.shore)
            if not (is_planar(a) and is_planar(b)):
                res.fail(G, shore=sorted(rep.shore))
    return res


def triangle_condition_sound(graphs: Iterable[MultiGraph]) -> SuiteResult:
    """An edge satisfying the triangle condition is never removable."""
    res = SuiteResult("triangle-condition")
    for G in graphs:
        if not is_matching_covered(G):
            continue
        for e in sorted(G.edge_ids):
            if triangle_condition(G, e):
                res.checked += 1
                if is_removable_edge(G, e):
                    res.fail(G, edge=e)
    return res


def _removable_in(H: MultiGraph, e: int) -> bool:
    """Edges absent from a contraction count as removable there."""
    return not H.has_edge_id(e) or e in _removable_set(H)


@lru_cache(maxsize=4096)
def _removable_set(H: MultiGraph) -> frozenset[int]:
    return frozenset(removable_edges(H))


def cross_contraction(bricks: Iterable[MultiGraph], max_n: int | None = None) -> SuiteResult:
    """Removability across the two contractions of a separating cut.

    * an edge removable in both contractions is removable in ``G``;
    * for a non-tight separating cut whose far contraction ``G/complement(X)``
      is a brick, a removable doubleton ``R`` of it with ``R`` missing the cut,
      or with its cut edge removable in ``G/X``, keeps an edge off the cut
      that is removable in ``G``;
    * if both contractions are bricks and ``{e,f}``, ``{e,g}`` are removable
      doubletons of them with ``e`` in the cut, then ``{f,g}`` is a removable
      doubleton of ``G``.
    """
    res = SuiteResult("cross-contraction-removability")
    counts = {"edge-in-both": 0, "doubleton-keeps-edge": 0, "doubleton-pair": 0}
    for G in bricks:
        try:
            reports = separating_cuts(G, max_n)
        except BudgetExceeded as exc:
            res.skipped.append({"graph": canonical_string(G), "reason": str(exc)})
            continue
        rem_G = set(removable_edges(G))
        dbl_G = {c.edges for c in removable_doubletons(G)}
        for rep in reports:
            X = rep.shore
            for shore in (X, complement(G, X)):
                near, far = contractions(G, complement(G, shore))[0], contractions(G, shore)[0]
                # near = G/complement(shore) keeps shore; far = G/shore
                for e in sorted(G.edge_ids):
                    if _removable_in(near, e) and _removable_in(far, e):
                        counts["edge-in-both"] += 1
                        if e not in rem_G:
                            res.fail(G, lemma="edge-in-both", shore=sorted(shore), edge=e)
                if rep.tight or not is_brick(near):
                    continue
                cut = edge_cut(G, shore)
                for R in removable_doubletons(near):
                    on_cut = [x for x in R.edges if x in cut]
                    if len(on_cut) > 1:
                        continue
                    if on_cut and not _removable_in(far, on_cut[0]):
                        continue
                    counts["doubleton-keeps-edge"] += 1
                    if not any(x in rem_G for x in R.edges if x not in cut):
                        res.fail(G, lemma="doubleton-keeps-edge", shore=sorted(shore), doubleton=list(R.edges))
            a, b = contractions(G, X)
            if not (is_brick(a) and is_brick(b)):
                continue
            cut = edge_cut(G, X)
            da = [c.edges for c in removable_doubletons(a)]
            db = [c.edges for c in removable_doubletons(b)]
            for e in sorted(cut):
                fs = [x for d in da if e in d for x in d if x != e]
                gs = [x for d in db if e in d for x in d if x != e]
                for f in fs:
                    for g in gs:
                        counts["doubleton-pair"] += 1
                        if tuple(sorted((f, g))) not in dbl_G:
                            res.fail(G, lemma="doubleton-pair", shore=sorted(X), edges=[e, f, g])
        res.checked += 1
    res.data["instances"] = counts
    return res


def doubling(bricks: Iterable[MultiGraph]) -> SuiteResult:
    """Adding a parallel copy ``f`` of ``e`` makes both removable, keeps a
    non-wheel-like brick non-wheel-like, and in wheel-like results every
    hub meets every parallel class."""
    res = SuiteResult("parallel-edge-doubling")
    for G in bricks:
        wl = bool(wheel_like_hubs(G))
        for e in sorted(G.edge_ids):
            H = add_parallel(G, e)
            f = max(H.edge_ids)
            res.checked += 1
            rem = _removable_set(H)
            if not (e in rem and f in rem):
                res.fail(G, edge=e, reason="copies not removable")
            hubs = wheel_like_hubs(H)
            if hubs and not wl:
                res.fail(G, edge=e, reason="doubling created a wheel-like brick")
            for h in hubs:
                if h not in G.ends(e):
                    res.fail(G, edge=e, reason=f"hub {h} misses the parallel class")
    return res


def _splice_is_wheel_like_lemma(G1, G2, smap, res: SuiteResult) -> None:
    W = splice(G1, G2, smap)
    if not is_brick(W) or not wheel_like_hubs(W):
        return
    res.checked += 1
    h1, h2 = wheel_like_hubs(G1), wheel_like_hubs(G2)
    if smap.u not in h1 and smap.v not in h2:
        res.failures.append({"G1": canonical_string(G1), "G2": canonical_string(G2),
                             "u": smap.u, "v": smap.v, "statement": 1})
    for A, B, a, hubs_b in ((G1, G2, smap.u, h2), (G2, G1, smap.v, h1)):
        if a not in wheel_like_hubs(A):
            continue
        covered = {x for c in removable_classes(A) for x in c.edges}
        if set(A.incident(a)) <= covered and not hubs_b:
            res.failures.append({"G1": canonical_string(G1), "G2": canonical_string(G2),
                                 "u": smap.u, "v": smap.v, "statement": 2})


def _wheel_pool() -> list[MultiGraph]:
    """Odd wheels on at most 6 vertices with every spoke pattern of multiplicity <= 3."""
    out = []
    for k in (3, 5):
        for mult in product((1, 2, 3), repeat=k):
            out.append(odd_wheel(k, mult))
    return out


def wheel_like_splice_parts(instances: int = 2000, seed: int = 7, max_n: int = 6) -> SuiteResult:
    """A wheel-like brick spliced from two bricks has a wheel-like part
    attached at its hub; and when one part is wheel-like at the attachment
    with its whole star in removable classes, the other is wheel-like too.

    Half of the random splices attach an odd wheel at its hub; all splices
    of two odd wheels with rims 3 and 5 are added, so wheel-like results
    are plentiful.
    """
    res = SuiteResult("wheel-like-splice-parts")
    rng = random.Random(seed)
    bricks = list(corpus_bricks(max_n))
    wheels = _wheel_pool()
    tried = 0
    while tried < instances:
        if rng.random() < 0.5:
            G = rng.choice(wheels)
            u = G.n - 1
            H = rng.choice(bricks + wheels)
            cands = [v for v in range(H.n) if H.degree(v) == G.degree(u)]
            if not cands:
                continue
            v = rng.choice(cands)
            gs, hs = sorted(G.incident(u)), sorted(H.incident(v))
            rng.shuffle(hs)
            got = (G, H, SpliceMap(u, v, tuple(zip(gs, hs))))
        else:
            got = _random_splice(rng, bricks + wheels)
            if got is None:
                continue
        tried += 1
        _splice_is_wheel_like_lemma(*got, res)
    # every splice of two odd wheels with rims 3 and 5, as a deterministic supplement
    for inst in wheel_splice_instances((3, 5)):
        tried += 1
        _splice_is_wheel_like_lemma(inst.G, inst.H, SpliceMap(inst.u, inst.v, inst.theta), res)
    res.data["splices"] = tried
    res.data["seed"] = seed
    return res


def refinement(bricks: Iterable[MultiGraph], max_n: int | None = None) -> SuiteResult:
    """For every robust cut, seen from either shore ``X``: a refinement
    ``X' ⊆ X ⊆ X''`` exists, every edge at either shrunk vertex of the
    bipartite middle is removable there, and when ``G/complement(X')`` is an
    odd wheel hubbed at its contraction vertex (which has at least two
    neighbours in the middle), ``G`` has a removable edge with both ends in
    ``(X' ∪ N(X')) - complement(X'')``."""
    res = SuiteResult("robust-refinement")
    counts = {"robust_cuts": 0, "strict_inner": 0, "odd_wheel_side": 0}
    example = None
    for G in bricks:
        try:
            reports = [r for r in separating_cuts(G, max_n) if r.robust]
        except BudgetExceeded as exc:
            res.skipped.append({"graph": canonical_string(G), "reason": str(exc)})
            continue
        res.checked += 1
        for rep in reports:
            counts["robust_cuts"] += 1
            for X in (rep.shore, complement(G, rep.shore)):
                ref = robust_refinement(G, X, max_n)
                if ref is None:
                    res.fail(G, shore=sorted(X), reason="no refinement")
                    continue
                if ref.inner < X:
                    counts["strict_inner"] += 1
                    if example is None:
                        example = {"graph": canonical_string(G), "X": sorted(X),
                                   "inner": sorted(ref.inner), "outer": sorted(ref.outer)}
                _check_refinement(G, X, ref, res, counts)
    res.data["instances"] = counts
    res.data["strict_example"] = example
    return res


def _check_refinement(G, X, ref, res: SuiteResult, counts: dict) -> None:
    H = ref.bipartite_part
    rem_H = set(removable_edges(H))
    for x in (ref.inner_vertex, ref.outer_vertex):
        bad = [e for e in H.incident(x) if e not in rem_H]
        if bad:
            res.fail(G, shore=sorted(X), reason="nonremovable edge at shrunk vertex", edges=bad)
    rem_G = _removable_set(G)
    for inner, outer_bar, x in (
        (ref.inner, complement(G, ref.outer), ref.inner_vertex),
        (complement(G, ref.outer), ref.inner, ref.outer_vertex),
    ):
        W, _ = contract(G, complement(G, inner))
        if W.n - 1 not in odd_wheel_centres(W) or len(H.neighbors(x)) < 2:
            continue
        counts["odd_wheel_side"] += 1
        zone = set(inner) | {y for a in inner for y in G.neighbors(a)}
        zone -= set(outer_bar)
        if not any(set(G.ends(e)) <= zone for e in rem_G):
            res.fail(G, shore=sorted(X), reason="no removable edge near the odd wheel side")


def odd_wheel_classes(max_k: int = 9) -> SuiteResult:
    """Odd wheels beyond K4 have exactly their spokes as removable classes;
    K4 has three removable doubletons."""
    res = SuiteResult("odd-wheel-removable-classes")
    for k in range(3, max_k + 1, 2):
        W = odd_wheel(k)
        res.checked += 1
        classes = removable_classes(W)
        if k == 3:
            ok = len(classes) == 3 and all(c.is_doubleton for c in classes)
        else:
            ok = [c.edges for c in classes] == [(e,) for e in sorted(W.incident(k))]
        if not ok:
            res.fail(W, classes=[list(c.edges) for c in classes])
    return res


def fixtures_not_wheel_like() -> SuiteResult:
    res = SuiteResult("c6bar-r8-not-wheel-like")
    for name in ("c6bar", "r8"):
        G = _named(name)
        res.checked += 1
        if not is_brick(G) or wheel_like_hubs(G):
            res.fail(G, name=name)
    return res


# -- engine cross-checks ----------------------------------------------------------

def matching_engines(graphs: Iterable[MultiGraph]) -> SuiteResult:
    """Blossom and exhaustive search agree on the maximum matching size."""
    res = SuiteResult("matching-engines")
    for G in graphs:
        res.checked += 1
        a, b = max_matching(G), max_matching_exhaustive(G)
        if len(a) != len(b):
            res.fail(G, blossom=len(a), exhaustive=len(b))
    return res


def decomposition_order(graphs: Iterable[MultiGraph]) -> SuiteResult:
    """The number of bricks does not depend on which tight cut is split first."""
    res = SuiteResult("brick-count-order")
    for G in graphs:
        if not is_matching_covered(G):
            continue
        res.checked += 1
        a, b = brick_count(G, False), brick_count(G, True)
        if a != b:
            res.fail(G, smallest_first=a, largest_first=b)
    return res


def codec_round_trip(graphs: Iterable[MultiGraph]) -> SuiteResult:
    res = SuiteResult("codec-round-trip")
    for G in graphs:
        res.checked += 1
        text = emit_graph6(G) if G.is_simple() else emit_sparse6(G)
        again = parse_any(text)
        out = emit_graph6(again) if again.is_simple() else emit_sparse6(again)
        if out != text:
            res.fail(G, text=text, again=out)
    return res


# -- drivers ---------------------------------------------------------------------------

def lemma_suites(max_n: int = 8, solid_max_n: int | None = None) -> list[SuiteResult]:
    """Every lemma suite on the built-in corpus up to ``max_n`` vertices."""
    graphs = corpus(max_n)
    bricks = corpus_bricks(max_n)
    return [
        barrier_forbidden(graphs),
        splicing_preserves_mc(),
        nonadjacent_removables(bricks),
        near_bipartite_wheel_like(bricks),
        robust_cut_exists(bricks, solid_max_n),
        six_vertex_bricks(bricks),
        planar_solid_odd_wheels(bricks, solid_max_n),
        contraction_planarity(bricks, solid_max_n),
        triangle_condition_sound(graphs),
        cross_contraction(bricks, solid_max_n),
        doubling(bricks),
        wheel_like_splice_parts(),
        refinement(bricks, solid_max_n),
        odd_wheel_classes(),
        fixtures_not_wheel_like(),
    ]


def engine_suites(graphs: Iterable[MultiGraph]) -> list[SuiteResult]:
    graphs = list(graphs)
    return [matching_engines(graphs), decomposition_order(graphs), codec_round_trip(graphs)]

