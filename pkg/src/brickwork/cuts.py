"""Cut classification, tight cut decomposition, bricks, braces, solidity.

Only shores of odd size are ever searched: contracting an even shore
leaves an odd number of vertices, so such a cut can be neither tight nor
separating.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

import numpy as np

from .graph import MultiGraph, bipartition, complement, contract, edge_cut, is_bipartite
from .matching import is_matching_covered, pm_table

log = logging.getLogger(__name__)

DEFAULT_SOLID_MAX_N = int(os.environ.get("BRICKWORK_SOLID_MAX_N", "12"))


class BudgetExceeded(RuntimeError):
    """An exhaustive search was refused because the input is too large."""


@dataclass(frozen=True)
class CutReport:
    shore: frozenset[int]
    cut: frozenset[int]
    trivial: bool
    separating: bool
    tight: bool
    robust: bool
    # a perfect matching meeting the cut in more than one edge (non-tight witness)
    witness: frozenset[int] | None = None
    shore_contraction_mc: bool = False  # G/X
    far_contraction_mc: bool = False  # G/complement(X)
    shore_contraction_near_brick: bool | None = None
    far_contraction_near_brick: bool | None = None


# -- shore enumeration -----------------------------------------------------

@lru_cache(maxsize=64)
def _odd_shores(n: int) -> tuple[tuple[int, ...], np.ndarray]:
    """Nontrivial odd shores ordered by size, then lexicographically."""
    shores = []
    for k in range(3, n - 2, 2):
        for combo in combinations(range(n), k):
            mask = 0
            for x in combo:
                mask |= 1 << x
            shores.append(mask)
    side = np.zeros((len(shores), n), dtype=bool)
    for r, mask in enumerate(shores):
        for x in range(n):
            if mask >> x & 1:
                side[r, x] = True
    side.setflags(write=False)
    return tuple(shores), side


def _mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def _tight_flags(G: MultiGraph, side: np.ndarray) -> np.ndarray:
    """For each row of ``side`` (a shore indicator), is the cut tight."""
    table = pm_table(G)
    us = np.fromiter((e.u for e in G.edges), dtype=np.intp, count=G.m)
    vs = np.fromiter((e.v for e in G.edges), dtype=np.intp, count=G.m)
    out = np.empty(side.shape[0], dtype=bool)
    pmT = table.matrix.T
    step = max(1, 2_000_000 // max(1, table.count))
    for lo in range(0, side.shape[0], step):
        block = side[lo:lo + step]
        cuts = (block[:, us] != block[:, vs]).astype(np.float32)
        hits = cuts @ pmT
        out[lo:lo + step] = np.all(hits == 1.0, axis=1)
    return out


def is_tight_cut(G: MultiGraph, X) -> bool:
    """Every perfect matching uses exactly one edge of the cut."""
    cut = edge_cut(G, X)
    mask = 0
    for eid in cut:
        mask |= 1 << G.position(eid)
    return all((pm & mask).bit_count() == 1 for pm in pm_table(G).masks)


def non_tight_witness(G: MultiGraph, X) -> frozenset[int] | None:
    cut = edge_cut(G, X)
    mask = 0
    for eid in cut:
        mask |= 1 << G.position(eid)
    for pm in pm_table(G).masks:
        if (pm & mask).bit_count() != 1:
            return frozenset(G.edges[i].id for i in range(G.m) if pm >> i & 1)
    return None


def contractions(G: MultiGraph, X) -> tuple[MultiGraph, MultiGraph]:
    """``(G/X, G/complement(X))``."""
    X = frozenset(X)
    return contract(G, X)[0], contract(G, complement(G, X))[0]


def is_separating_cut(G: MultiGraph, X) -> bool:
    a, b = contractions(G, X)
    return is_matching_covered(a) and is_matching_covered(b)


def classify_cut(G: MultiGraph, X) -> CutReport:
    """Trivial / separating / tight / robust status of ``∂(X)`` in a matching covered ``G``."""
    X = frozenset(X)
    cut = edge_cut(G, X)
    trivial = len(X) == 1 or len(X) == G.n - 1
    witness = non_tight_witness(G, X)
    tight = witness is None
    a, b = contractions(G, X)
    mc_a, mc_b = is_matching_covered(a), is_matching_covered(b)
    separating = mc_a and mc_b
    nb_a = nb_b = None
    robust = False
    if separating and not tight:
        nb_a, nb_b = is_near_brick(a), is_near_brick(b)
        robust = nb_a and nb_b
    return CutReport(X, cut, trivial, separating, tight, robust, witness, mc_a, mc_b, nb_a, nb_b)


# -- bricks and braces -----------------------------------------------------

def nontrivial_tight_cuts(G: MultiGraph) -> list[frozenset[int]]:
    """Every nontrivial tight shore, both sides of each cut, in search order."""
    shores, side = _odd_shores(G.n)
    if not shores:
        return []
    flags = _tight_flags(G, side)
    return [_mask_to_set(shores[i]) for i in np.flatnonzero(flags)]


def find_nontrivial_tight_cut(G: MultiGraph, largest_first: bool = False) -> frozenset[int] | None:
    """First nontrivial tight shore in (size, lexicographic) order, or None."""
    found = nontrivial_tight_cuts(G)
    if not found:
        return None
    return found[-1] if largest_first else found[0]


@lru_cache(maxsize=8192)
def is_brick(G: MultiGraph) -> bool:
    if G.n < 4 or not is_matching_covered(G) or is_bipartite(G):
        return False
    return find_nontrivial_tight_cut(G) is None


def is_brace(G: MultiGraph) -> bool:
    if not is_matching_covered(G) or not is_bipartite(G):
        return False
    return find_nontrivial_tight_cut(G) is None


@dataclass
class Decomposition:
    """Tight cut decomposition tree; leaves are bricks or braces."""

    graph: MultiGraph
    kind: str  # "brick", "brace" or "split"
    shore: frozenset[int] | None = None
    children: list["Decomposition"] = field(default_factory=list)

    def leaves(self) -> list["Decomposition"]:
        if not self.children:
            return [self]
        out = []
        for c in self.children:
            out.extend(c.leaves())
        return out

    @property
    def bricks(self) -> list[MultiGraph]:
        return [leaf.graph for leaf in self.leaves() if leaf.kind == "brick"]

    @property
    def braces(self) -> list[MultiGraph]:
        return [leaf.graph for leaf in self.leaves() if leaf.kind == "brace"]


def tight_cut_decomposition(G: MultiGraph, largest_first: bool = False) -> Decomposition:
    if not is_matching_covered(G):
        raise ValueError("tight cut decomposition needs a matching covered graph")
    X = find_nontrivial_tight_cut(G, largest_first)
    if X is None:
        return Decomposition(G, "brace" if is_bipartite(G) else "brick")
    a, b = contractions(G, X)
    return Decomposition(
        G, "split", X,
        [tight_cut_decomposition(a, largest_first), tight_cut_decomposition(b, largest_first)],
    )


@lru_cache(maxsize=8192)
def brick_count(G: MultiGraph, largest_first: bool = False) -> int:
    """Number of bricks in a tight cut decomposition."""
    return len(tight_cut_decomposition(G, largest_first).bricks)


def is_near_brick(G: MultiGraph) -> bool:
    return is_matching_covered(G) and brick_count(G) == 1


# -- separating cuts, solidity, robust cuts ----------------------------------

def _cut_representatives(G: MultiGraph) -> list[frozenset[int]]:
    """One shore per nontrivial odd cut, the one reached first in search order."""
    shores, _ = _odd_shores(G.n)
    full = (1 << G.n) - 1
    seen = set()
    reps = []
    for mask in shores:
        key = min(mask, full & ~mask)
        if key in seen:
            continue
        seen.add(key)
        reps.append(_mask_to_set(mask))
    return reps


def _check_budget(G: MultiGraph, max_n: int | None, what: str) -> None:
    bound = DEFAULT_SOLID_MAX_N if max_n is None else max_n
    if G.n > bound:
        log.info("refusing %s on %d vertices (bound %d)", what, G.n, bound)
        raise BudgetExceeded(f"{what} refused: {G.n} vertices exceeds bound {bound}")


def separating_cuts(G: MultiGraph, max_n: int | None = None) -> list[CutReport]:
    """Reports for every nontrivial separating cut of a matching covered graph."""
    _check_budget(G, max_n, "separating cut search")
    out = []
    for X in _cut_representatives(G):
        a, c = contractions(G, X)
        if is_matching_covered(a) and is_matching_covered(c):
            out.append(classify_cut(G, X))
    return out


def is_solid(G: MultiGraph, max_n: int | None = None) -> bool:
    """Every separating cut is tight."""
    _check_budget(G, max_n, "solidity test")
    tight = {frozenset(X) for X in nontrivial_tight_cuts(G)}
    for X in _cut_representatives(G):
        if X in tight:
            continue
        if is_separating_cut(G, X):
            return False
    return True


def find_robust_cut(G: MultiGraph, max_n: int | None = None) -> CutReport | None:
    _check_budget(G, max_n, "robust cut search")
    tight = {frozenset(X) for X in nontrivial_tight_cuts(G)}
    for X in _cut_representatives(G):
        if X in tight or not is_separating_cut(G, X):
            continue
        report = classify_cut(G, X)
        if report.robust:
            return report
    return None


@dataclass(frozen=True)
class Refinement:
    inner: frozenset[int]  # X' ⊆ X
    outer: frozenset[int]  # X'' ⊇ X
    bipartite_part: MultiGraph  # X' and complement(X'') shrunk
    inner_vertex: int  # image of X' in the bipartite part
    outer_vertex: int  # image of complement(X'')


def contract_two(G: MultiGraph, A, B) -> tuple[MultiGraph, int, int]:
    """Shrink disjoint sets ``A`` and ``B``; returns graph and their new vertices."""
    A, B = frozenset(A), frozenset(B)
    H, vmap = contract(G, A)
    a = vmap[next(iter(A))]
    B2 = frozenset(vmap[x] for x in B)
    H2, vmap2 = contract(H, B2)
    return H2, vmap2[a], vmap2[next(iter(B2))]


def robust_refinement(G: MultiGraph, X, max_n: int | None = None) -> Refinement | None:
    """Search ``X' ⊆ X ⊆ X''`` with both outer contractions bricks and a bipartite middle.

    ``G/complement(X')`` and ``G/X''`` must be bricks and the graph obtained by
    shrinking ``X'`` and ``complement(X'')`` must be bipartite and matching
    covered with the two shrunk vertices in different colour classes. Inner
    candidates are tried largest first, outer candidates smallest first.
    """
    _check_budget(G, max_n, "robust refinement search")
    X = frozenset(X)
    Xbar = complement(G, X)
    inner_cands = [
        frozenset(c)
        for k in range(len(X), 2, -1) if k % 2
        for c in combinations(sorted(X), k)
    ]
    outer_cands = [
        X | frozenset(c)
        for k in range(0, len(Xbar) - 2) if k % 2 == 0
        for c in combinations(sorted(Xbar), k)
    ]
    good_inner = [Xp for Xp in inner_cands if is_brick(contract(G, complement(G, Xp))[0])]
    good_outer = [Xpp for Xpp in outer_cands if is_brick(contract(G, Xpp)[0])]
    for Xp in good_inner:
        for Xpp in good_outer:
            H, a, c = contract_two(G, Xp, complement(G, Xpp))
            parts = bipartition(H)
            if parts is None or (a in parts[0]) == (c in parts[0]):
                continue
            if is_matching_covered(H):
                return Refinement(Xp, Xpp, H, a, c)
    return None
