"""Removable edges and doubletons, hubs of wheel-like bricks, related tests."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .cuts import is_brick
from .graph import (
    MultiGraph,
    bipartition,
    complement,
    delete_edges,
    delete_vertices,
    is_bipartite,
    is_connected,
)
from .matching import is_matching_covered, pm_table


@dataclass(frozen=True, order=True)
class RemovableClass:
    """A removable edge ``(e,)`` or a removable doubleton ``(e, f)`` with ``e < f``."""

    edges: tuple[int, ...]

    @classmethod
    def edge(cls, e: int) -> "RemovableClass":
        return cls((e,))

    @classmethod
    def doubleton(cls, e: int, f: int) -> "RemovableClass":
        return cls(tuple(sorted((e, f))))

    @property
    def is_doubleton(self) -> bool:
        return len(self.edges) == 2

    def touches(self, G: MultiGraph, v: int) -> bool:
        return any(v in G.ends(e) for e in self.edges)

    def __str__(self) -> str:
        if self.is_doubleton:
            return "{%d,%d}" % self.edges
        return str(self.edges[0])


def is_removable_edge(G: MultiGraph, e: int) -> bool:
    return is_matching_covered(delete_edges(G, [e]))


def is_removable_doubleton(G: MultiGraph, e: int, f: int) -> bool:
    if e == f:
        raise ValueError("a doubleton needs two distinct edges")
    return (
        is_matching_covered(delete_edges(G, [e, f]))
        and not is_removable_edge(G, e)
        and not is_removable_edge(G, f)
    )


@lru_cache(maxsize=8192)
def _removable_flags(G: MultiGraph) -> tuple[tuple[bool, ...], tuple[tuple[int, int], ...]]:
    """Removable edge flags (by position) and doubleton position pairs.

    Reads everything off the perfect matching table: ``G - S`` is matching
    covered iff it is connected and each remaining edge lies in a perfect
    matching of ``G`` avoiding ``S``.
    """
    P = pm_table(G).matrix
    m = G.m
    if m < 2:
        return tuple([False] * m), ()
    Q = 1.0 - P
    # with_without[j, i]: matchings containing j but not i
    with_without = P.T @ Q
    np.fill_diagonal(with_without, 1.0)
    removable = []
    for i in range(m):
        ok = bool(np.all(with_without[:, i] > 0))
        if ok:
            ok = is_connected(delete_edges(G, [G.edges[i].id]))
        removable.append(ok)
    candidates = [i for i in range(m) if not removable[i]]
    cand_set = np.zeros(m, dtype=bool)
    cand_set[candidates] = True
    pairs = []
    for i in candidates:
        rows = P[:, i] == 0.0
        sub = P[rows]
        if sub.shape[0] == 0:
            continue
        both = sub.T @ (1.0 - sub)  # both[j, l]: avoid i and l, contain j
        both[i, :] = 1.0
        np.fill_diagonal(both, 1.0)
        good = np.all(both > 0, axis=0)
        for l in np.flatnonzero(good & cand_set):
            l = int(l)
            if l <= i:
                continue
            if is_connected(delete_edges(G, [G.edges[i].id, G.edges[l].id])):
                pairs.append((i, l))
    return tuple(removable), tuple(pairs)


def removable_classes(G: MultiGraph) -> list[RemovableClass]:
    """All removable classes of a matching covered graph.

    Removable edges come first in id order, then doubletons by id pair.
    """
    if not is_matching_covered(G):
        raise ValueError("removable classes are defined for matching covered graphs")
    flags, pairs = _removable_flags(G)
    edges = sorted(RemovableClass.edge(G.edges[i].id) for i in range(G.m) if flags[i])
    doubles = sorted(RemovableClass.doubleton(G.edges[i].id, G.edges[l].id) for i, l in pairs)
    return edges + doubles


def removable_classes_by_deletion(G: MultiGraph) -> list[RemovableClass]:
    """Same answer as ``removable_classes`` by literal delete-and-test; slow."""
    ids = sorted(G.edge_ids)
    edges = [RemovableClass.edge(e) for e in ids if is_removable_edge(G, e)]
    rem = {c.edges[0] for c in edges}
    rest = [e for e in ids if e not in rem]
    doubles = [
        RemovableClass.doubleton(e, f)
        for e, f in combinations(rest, 2)
        if is_matching_covered(delete_edges(G, [e, f]))
    ]
    return edges + doubles


def removable_edges(G: MultiGraph) -> list[int]:
    return [c.edges[0] for c in removable_classes(G) if not c.is_doubleton]


def removable_doubletons(G: MultiGraph) -> list[RemovableClass]:
    return [c for c in removable_classes(G) if c.is_doubleton]


def has_two_nonadjacent_removable_edges(G: MultiGraph) -> tuple[int, int] | None:
    rem = removable_edges(G)
    for e, f in combinations(rem, 2):
        if not set(G.ends(e)) & set(G.ends(f)):
            return e, f
    return None


def is_near_bipartite(G: MultiGraph) -> RemovableClass | None:
    """First removable doubleton whose deletion leaves a bipartite graph."""
    for c in removable_doubletons(G):
        if is_bipartite(delete_edges(G, c.edges)):
            return c
    return None


def wheel_like_hubs(G: MultiGraph) -> tuple[int, ...]:
    """Vertices meeting an edge of every removable class (empty unless a brick)."""
    if not is_brick(G):
        return ()
    classes = removable_classes(G)
    return tuple(v for v in range(G.n) if all(c.touches(G, v) for c in classes))


def is_wheel_like(G: MultiGraph) -> bool:
    """A brick with at least one hub; non-bricks are never wheel-like."""
    return bool(wheel_like_hubs(G))


def triangle_condition(G: MultiGraph, e: int) -> bool:
    """Some end of ``e`` has exactly three edges, to three distinct vertices,
    and its two neighbours other than the far end of ``e`` are adjacent."""
    a, b = G.ends(e)
    for x, y in ((a, b), (b, a)):
        if G.degree(x) != 3:
            continue
        nbrs = G.neighbors(x)
        if len(nbrs) != 3:
            continue
        p, q = [w for w in nbrs if w != y]
        if G.adjacent(p, q):
            return True
    return False


def bipartite_nonremovable_witness(G: MultiGraph, e: int) -> tuple[frozenset[int], frozenset[int]] | None:
    """Sets ``(A1, B1)`` certifying that ``e = uv`` is not removable in bipartite ``G``.

    ``A`` is the colour class containing ``u``; ``A1 ⊂ A`` holds ``u``, ``B1 ⊂ B`` avoids ``v``,
    ``G[A1 ∪ B1]`` is matching covered and ``e`` is the only edge from ``A1``
    to ``B - B1``. Smallest witness first.
    """
    parts = bipartition(G)
    if parts is None:
        raise ValueError("graph is not bipartite")
    u, v = G.ends(e)
    A, B = parts
    if u not in A:
        A, B = B, A
    A_rest = sorted(A - {u})
    B_rest = sorted(B - {v})
    for k in range(1, len(A)):
        for extra_a in combinations(A_rest, k - 1):
            A1 = frozenset((u, *extra_a))
            for B1t in combinations(B_rest, k):
                B1 = frozenset(B1t)
                crossing = [
                    x.id for x in G.edges
                    if (x.u in A1 and x.v in B and x.v not in B1)
                    or (x.v in A1 and x.u in B and x.u not in B1)
                ]
                if crossing != [e]:
                    continue
                sub, _ = delete_vertices(G, complement(G, A1 | B1))
                if is_matching_covered(sub):
                    return A1, B1
    return None
