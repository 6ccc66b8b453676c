"""Exhaustive generation of small connected simple graphs.

Every connected graph on ``n`` vertices has a vertex whose removal leaves
it connected, so extending each connected graph on ``n - 1`` vertices by a
new vertex with every nonempty neighbourhood reaches all of them;
canonical forms remove the duplicates.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from ..canon import canonical_form, canonical_graph
from ..graph import Edge, MultiGraph

MAX_BUILTIN_N = 8

# connected graphs on n unlabelled vertices, OEIS A001349
KNOWN_CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[MultiGraph, ...]:
    if n == 1:
        return (MultiGraph(1),)
    found: dict[tuple, MultiGraph] = {}
    for G in _level(n - 1):
        for S in range(1, 1 << (n - 1)):
            extra = [v for v in range(n - 1) if S >> v & 1]
            edges = G.edges + tuple(Edge(v, n - 1, G.m + i) for i, v in enumerate(extra))
            H = MultiGraph(n, edges)
            key = canonical_form(H)
            if key not in found:
                found[key] = H
    return tuple(canonical_graph(found[k]) for k in sorted(found))


def generate_connected_graphs(n: int) -> Iterator[MultiGraph]:
    """One canonical representative per isomorphism class, in certificate order."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_BUILTIN_N:
        raise ValueError(
            f"built-in generation stops at n={MAX_BUILTIN_N}; for larger n stream graph6 "
            "from an external generator (e.g. `geng -c {n}`) and read it with read_graph6_stream"
        )
    yield from _level(n)


def brick_candidates(n: int) -> Iterator[MultiGraph]:
    """Connected graphs on ``n`` vertices with minimum degree at least 3.

    Bricks are 3-connected, so nothing else can be a brick; the census uses
    this only to order work, the brick predicate still runs on every graph
    it reports on.
    """
    for G in generate_connected_graphs(n):
        if all(G.degree(v) >= 3 for v in range(G.n)):
            yield G
