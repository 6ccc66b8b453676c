"""Loopless undirected multigraphs with stable edge identities.

Vertices are ``0..n-1``. Every edge carries an integer id that survives
deletion, contraction and splicing, so a removable class or a splice
bijection computed on one graph can be looked up on a derived graph.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence


class Edge(NamedTuple):
    u: int
    v: int
    id: int


class GraphError(ValueError):
    """Raised when an operation's precondition on its graph arguments fails."""


@dataclass(frozen=True, eq=True)
class MultiGraph:
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("a graph needs at least one vertex")
        seen = set()
        for e in self.edges:
            if not (0 <= e.u < self.n and 0 <= e.v < self.n):
                raise GraphError(f"edge {e.id} has an endpoint outside 0..{self.n - 1}")
            if e.u == e.v:
                raise GraphError(f"edge {e.id} is a loop at {e.u}")
            if e.id in seen:
                raise GraphError(f"duplicate edge id {e.id}")
            seen.add(e.id)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "MultiGraph":
        """Build a graph whose edge ids are the positions of ``pairs``."""
        return cls(n, tuple(Edge(int(u), int(v), i) for i, (u, v) in enumerate(pairs)))

    # -- queries -----------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(e.id for e in self.edges)

    @cached_property
    def _by_id(self) -> dict[int, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def _position(self) -> dict[int, int]:
        return {e.id: i for i, e in enumerate(self.edges)}

    @cached_property
    def _incidence(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for e in self.edges:
            inc[e.u].append(e.id)
            inc[e.v].append(e.id)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhood bitmask of every vertex (multiplicity ignored)."""
        adj = [0] * self.n
        for e in self.edges:
            adj[e.u] |= 1 << e.v
            adj[e.v] |= 1 << e.u
        return tuple(adj)

    @cached_property
    def multiplicity(self) -> dict[tuple[int, int], int]:
        mult: dict[tuple[int, int], int] = defaultdict(int)
        for e in self.edges:
            mult[_key(e.u, e.v)] += 1
        return dict(mult)

    def edge(self, eid: int) -> Edge:
        try:
            return self._by_id[eid]
        except KeyError:
            raise GraphError(f"no edge with id {eid}") from None

    def ends(self, eid: int) -> tuple[int, int]:
        e = self.edge(eid)
        return e.u, e.v

    def position(self, eid: int) -> int:
        """Index of edge ``eid`` inside ``self.edges``."""
        try:
            return self._position[eid]
        except KeyError:
            raise GraphError(f"no edge with id {eid}") from None

    def has_edge_id(self, eid: int) -> bool:
        return eid in self._by_id

    def incident(self, v: int) -> tuple[int, ...]:
        """Ids of the edges of the trivial cut at ``v``."""
        return self._incidence[v]

    def degree(self, v: int) -> int:
        """Number of edges at ``v``, parallel edges counted separately."""
        return len(self._incidence[v])

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adjacency[v])

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def edges_between(self, u: int, v: int) -> list[int]:
        return [eid for eid in self._incidence[u] if v in self.ends(eid)]

    def other_end(self, eid: int, v: int) -> int:
        a, b = self.ends(eid)
        if v == a:
            return b
        if v == b:
            return a
        raise GraphError(f"vertex {v} is not an end of edge {eid}")

    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)

    def is_simple(self) -> bool:
        return all(k == 1 for k in self.multiplicity.values())

    def pairs(self) -> list[tuple[int, int]]:
        return [(e.u, e.v) for e in self.edges]

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, m={self.m})"


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# -- vertex sets -----------------------------------------------------------

def as_vertex_set(G: MultiGraph, X: Iterable[int]) -> frozenset[int]:
    X = frozenset(int(x) for x in X)
    if any(not 0 <= x < G.n for x in X):
        raise GraphError(f"vertex set {sorted(X)} is not a subset of 0..{G.n - 1}")
    return X


def complement(G: MultiGraph, X: Iterable[int]) -> frozenset[int]:
    X = as_vertex_set(G, X)
    return frozenset(range(G.n)) - X


def _check_shore(G: MultiGraph, X: Iterable[int]) -> frozenset[int]:
    X = as_vertex_set(G, X)
    if not X or len(X) == G.n:
        raise GraphError("a cut shore must be a nonempty proper vertex subset")
    return X


# -- constructions ---------------------------------------------------------

def edge_cut(G: MultiGraph, X: Iterable[int]) -> frozenset[int]:
    """Ids of the edges with exactly one end in ``X``."""
    X = _check_shore(G, X)
    return frozenset(e.id for e in G.edges if (e.u in X) != (e.v in X))


def contract(G: MultiGraph, X: Iterable[int]) -> tuple[MultiGraph, list[int]]:
    """Shrink ``X`` to one vertex, dropping the edges inside ``X``.

    Vertices outside ``X`` keep their relative order and the new vertex is
    the last one. Returns the graph and the map old vertex -> new vertex.
    Edge ids are preserved.
    """
    X = _check_shore(G, X)
    vmap = [0] * G.n
    nxt = 0
    for v in range(G.n):
        if v not in X:
            vmap[v] = nxt
            nxt += 1
    for v in X:
        vmap[v] = nxt
    edges = tuple(
        Edge(vmap[e.u], vmap[e.v], e.id)
        for e in G.edges
        if not (e.u in X and e.v in X)
    )
    return MultiGraph(nxt + 1, edges), vmap


def delete_edges(G: MultiGraph, ids: Iterable[int]) -> MultiGraph:
    ids = set(ids)
    for eid in ids:
        G.edge(eid)
    return MultiGraph(G.n, tuple(e for e in G.edges if e.id not in ids))


def delete_vertices(G: MultiGraph, S: Iterable[int]) -> tuple[MultiGraph, list[int]]:
    """Remove ``S``; returns the graph and old->new vertex map (-1 for deleted)."""
    S = as_vertex_set(G, S)
    if len(S) == G.n:
        raise GraphError("cannot delete every vertex")
    vmap = [-1] * G.n
    nxt = 0
    for v in range(G.n):
        if v not in S:
            vmap[v] = nxt
            nxt += 1
    edges = tuple(
        Edge(vmap[e.u], vmap[e.v], e.id) for e in G.edges if e.u not in S and e.v not in S
    )
    return MultiGraph(nxt, edges), vmap


def next_edge_id(G: MultiGraph) -> int:
    return max(G.edge_ids, default=-1) + 1


def add_parallel(G: MultiGraph, eid: int) -> MultiGraph:
    """Add a copy of edge ``eid``; the copy receives the next free id."""
    u, v = G.ends(eid)
    return MultiGraph(G.n, G.edges + (Edge(u, v, next_edge_id(G)),))


def add_edge(G: MultiGraph, u: int, v: int) -> MultiGraph:
    return MultiGraph(G.n, G.edges + (Edge(u, v, next_edge_id(G)),))


def underlying_simple(G: MultiGraph) -> MultiGraph:
    """Keep the lowest-id edge of every parallel class."""
    seen = set()
    keep = []
    for e in sorted(G.edges, key=lambda e: e.id):
        k = _key(e.u, e.v)
        if k not in seen:
            seen.add(k)
            keep.append(e)
    return MultiGraph(G.n, tuple(sorted(keep, key=lambda e: G.position(e.id))))


def parallel_classes(G: MultiGraph) -> list[tuple[int, ...]]:
    """Groups of two or more edges sharing both ends, ordered by lowest id."""
    groups: dict[tuple[int, int], list[int]] = defaultdict(list)
    for e in G.edges:
        groups[_key(e.u, e.v)].append(e.id)
    return sorted(tuple(sorted(g)) for g in groups.values() if len(g) > 1)


def relabel(G: MultiGraph, perm: Sequence[int]) -> MultiGraph:
    """Vertex ``v`` becomes ``perm[v]``."""
    return MultiGraph(G.n, tuple(Edge(perm[e.u], perm[e.v], e.id) for e in G.edges))


def renumber_edges(G: MultiGraph) -> MultiGraph:
    """Dense ids ``0..m-1`` in edge-list order."""
    return MultiGraph(G.n, tuple(Edge(e.u, e.v, i) for i, e in enumerate(G.edges)))


# -- connectivity ----------------------------------------------------------

def component_masks(adjacency: Sequence[int], alive: int) -> list[int]:
    """Connected components (as bitmasks) of the subgraph induced on ``alive``."""
    comps = []
    rest = alive
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nb = adjacency[low.bit_length() - 1] & alive & ~comp
            comp |= nb
            frontier |= nb
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected(G: MultiGraph) -> bool:
    return len(component_masks(G.adjacency, (1 << G.n) - 1)) == 1


def components(G: MultiGraph) -> list[frozenset[int]]:
    return [frozenset(_bits(c)) for c in component_masks(G.adjacency, (1 << G.n) - 1)]


def bipartition(G: MultiGraph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Colour classes ``(A, B)`` with vertex 0 in ``A``, or None if an odd cycle exists.

    For disconnected graphs each component's smallest vertex goes to ``A``.
    """
    colour = [-1] * G.n
    for s in range(G.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in G.neighbors(x):
                if colour[y] < 0:
                    colour[y] = 1 - colour[x]
                    stack.append(y)
                elif colour[y] == colour[x]:
                    return None
    A = frozenset(v for v in range(G.n) if colour[v] == 0)
    return A, frozenset(range(G.n)) - A


def odd_cycle(G: MultiGraph) -> list[int] | None:
    """A vertex sequence of some odd cycle, or None when ``G`` is bipartite."""
    colour = [-1] * G.n
    parent = [-1] * G.n
    for s in range(G.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = [s]
        for x in queue:
            for y in G.neighbors(x):
                if colour[y] < 0:
                    colour[y] = 1 - colour[x]
                    parent[y] = x
                    queue.append(y)
                elif colour[y] == colour[x]:
                    px, py = [x], [y]
                    while px[-1] != s:
                        px.append(parent[px[-1]])
                    while py[-1] != s:
                        py.append(parent[py[-1]])
                    while len(px) > 1 and len(py) > 1 and px[-2] == py[-2]:
                        px.pop()
                        py.pop()
                    return px + py[-2::-1]
    return None


def is_bipartite(G: MultiGraph) -> bool:
    return bipartition(G) is not None


def is_three_connected(G: MultiGraph) -> bool:
    """At least four vertices and no separating set of at most two vertices."""
    if G.n < 4:
        return False
    full = (1 << G.n) - 1
    adj = G.adjacency
    if len(component_masks(adj, full)) != 1:
        return False
    for a in range(G.n):
        if len(component_masks(adj, full & ~(1 << a))) != 1:
            return False
        for b in range(a + 1, G.n):
            if len(component_masks(adj, full & ~(1 << a) & ~(1 << b))) != 1:
                return False
    return True


# -- splicing --------------------------------------------------------------

@dataclass(frozen=True)
class SpliceMap:
    """Splice ``G`` at ``u`` with ``H`` at ``v``; ``theta`` pairs (G edge id, H edge id)."""

    u: int
    v: int
    theta: tuple[tuple[int, int], ...] = field(default=())

    def check(self, G: MultiGraph, H: MultiGraph) -> None:
        du, dv = G.degree(self.u), H.degree(self.v)
        if du != dv:
            raise GraphError(f"degree mismatch: d_G({self.u})={du}, d_H({self.v})={dv}")
        left = [a for a, _ in self.theta]
        right = [b for _, b in self.theta]
        if sorted(left) != sorted(G.incident(self.u)) or sorted(right) != sorted(H.incident(self.v)):
            raise GraphError("theta must be a bijection between the two edge stars")


def splice(G: MultiGraph, H: MultiGraph, smap: SpliceMap) -> MultiGraph:
    """Glue ``G - u`` and ``H - v`` along ``smap.theta``.

    Vertices of ``G - u`` come first (order kept), then those of ``H - v``.
    Edges of ``G`` keep their ids, the joining edge of a theta pair takes the
    id of its ``G`` edge, and edges of ``H - v`` are shifted by
    ``next_edge_id(G)``.
    """
    smap.check(G, H)
    u, v = smap.u, smap.v
    gmap = [-1] * G.n
    nxt = 0
    for x in range(G.n):
        if x != u:
            gmap[x] = nxt
            nxt += 1
    hmap = [-1] * H.n
    for y in range(H.n):
        if y != v:
            hmap[y] = nxt
            nxt += 1
    shift = next_edge_id(G)
    edges = [Edge(gmap[e.u], gmap[e.v], e.id) for e in G.edges if u not in (e.u, e.v)]
    for ge, he in smap.theta:
        a = G.other_end(ge, u)
        b = H.other_end(he, v)
        edges.append(Edge(gmap[a], hmap[b], ge))
    edges.extend(Edge(hmap[e.u], hmap[e.v], e.id + shift) for e in H.edges if v not in (e.u, e.v))
    edges.sort(key=lambda e: e.id)
    return MultiGraph(nxt, tuple(edges))


def splice_shore(G: MultiGraph, u: int) -> frozenset[int]:
    """Vertices of the splice result that came from ``G - u``."""
    return frozenset(range(G.n - 1))


# -- named graphs ----------------------------------------------------------

def odd_wheel(k: int, hub_multiplicities: Sequence[int] | None = None) -> MultiGraph:
    """Rim ``0..k-1`` in cyclic order, hub ``k``.

    Rim edge ``i(i+1)`` has id ``i``; the spokes follow, spoke copies to rim
    vertex ``i`` listed consecutively.
    """
    if k < 3 or k % 2 == 0:
        raise GraphError(f"an odd wheel needs an odd rim length >= 3, got {k}")
    mult = list(hub_multiplicities) if hub_multiplicities is not None else [1] * k
    if len(mult) != k or any(x < 1 for x in mult):
        raise GraphError("need one multiplicity >= 1 per spoke")
    pairs = [(i, (i + 1) % k) for i in range(k)]
    for i, c in enumerate(mult):
        pairs.extend([(k, i)] * c)
    return MultiGraph.from_pairs(k + 1, pairs)


def wheel(k: int) -> MultiGraph:
    """Any wheel (odd or even rim); same labelling as ``odd_wheel``."""
    if k < 3:
        raise GraphError("a wheel needs a rim of length >= 3")
    pairs = [(i, (i + 1) % k) for i in range(k)] + [(k, i) for i in range(k)]
    return MultiGraph.from_pairs(k + 1, pairs)


def cycle(n: int) -> MultiGraph:
    return MultiGraph.from_pairs(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> MultiGraph:
    return MultiGraph.from_pairs(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> MultiGraph:
    return MultiGraph.from_pairs(n, list(combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> MultiGraph:
    """Classes ``0..a-1`` and ``a..a+b-1``."""
    return MultiGraph.from_pairs(a + b, [(i, a + j) for i in range(a) for j in range(b)])


# C6bar: complement of the hexagon 0-1-2-3-4-5-0. Triangles {0,2,4}, {1,3,5};
# rungs 0-3, 2-5, 4-1.
_C6BAR = [(0, 2), (2, 4), (0, 4), (1, 3), (3, 5), (1, 5), (0, 3), (2, 5), (1, 4)]

# R8: cubic Halin graph. Tree path 5-6-7 with leaves 0,1 on 5, leaf 2 on 6,
# leaves 3,4 on 7; outer cycle 0-1-2-3-4-0. Edge 8 (2-6) is its removable
# edge, {0,11} and {3,5} its removable doubletons.
_R8 = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
    (5, 0), (5, 1), (5, 6), (6, 2), (6, 7), (7, 3), (7, 4),
]

NAMED_GRAPHS = ("k4", "c6bar", "r8", "w5", "w7")


def named_graph(name: str) -> MultiGraph:
    """One of ``k4``, ``c6bar``, ``r8``, ``w5``, ``w7``; wheels use ``odd_wheel`` labels."""
    key = name.lower()
    if key == "k4":
        return odd_wheel(3)
    if key == "w5":
        return odd_wheel(5)
    if key == "w7":
        return odd_wheel(7)
    if key == "c6bar":
        return MultiGraph.from_pairs(6, _C6BAR)
    if key == "r8":
        return MultiGraph.from_pairs(8, _R8)
    raise GraphError(f"unknown graph name {name!r}; expected one of {', '.join(NAMED_GRAPHS)}")
