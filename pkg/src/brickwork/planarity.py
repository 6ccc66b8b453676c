"""Planarity verdicts and Kuratowski subdivisions.

The verdict comes from networkx's left-right planarity test on the
underlying simple graph; parallel edges never change planarity. The
witness side is independent: a nonplanar graph is shrunk edge by edge to
a minimal nonplanar subgraph, which is necessarily a subdivision of K5 or
K3,3, and the result is checked structurally by ``validate_witness``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from .graph import MultiGraph, component_masks


class WitnessBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class KuratowskiWitness:
    """``kind`` is ``"K5"`` or ``"K33"``.

    For K33 the first three branch vertices form one colour class. Each
    path is a vertex sequence joining two branch vertices.
    """

    kind: str
    branch: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]


def _simple_nx(G: MultiGraph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.pairs())
    return H


def is_planar(G: MultiGraph) -> bool:
    return nx.check_planarity(_simple_nx(G))[0]


def planar_embedding_is_valid(G: MultiGraph) -> bool:
    """Recompute a planar embedding and check it face by face (Euler's formula)."""
    ok, emb = nx.check_planarity(_simple_nx(G))
    if not ok:
        return False
    emb.check_structure()
    return True


def euler_bound_ok(G: MultiGraph) -> bool:
    """Necessary planarity condition ``m <= 3n - 6`` on the simple graph (n >= 3)."""
    m = len(G.multiplicity)
    return G.n < 3 or m <= 3 * G.n - 6


def _trace_paths(edges: set[tuple[int, int]], branch: list[int]) -> list[tuple[int, ...]]:
    adj: dict[int, list[int]] = {}
    for a, c in edges:
        adj.setdefault(a, []).append(c)
        adj.setdefault(c, []).append(a)
    bset = set(branch)
    paths = []
    seen_first = set()
    for s in branch:
        for nxt in adj[s]:
            if (s, nxt) in seen_first:
                continue
            walk = [s, nxt]
            while walk[-1] not in bset:
                x = walk[-1]
                walk.append(next(y for y in adj[x] if y != walk[-2]))
            seen_first.add((walk[-1], walk[-2]))
            paths.append(tuple(walk))
    return paths


def _minimal_nonplanar_edges(G: MultiGraph, budget: int) -> set[tuple[int, int]]:
    edges = sorted({(min(a, c), max(a, c)) for a, c in G.pairs()})
    H = nx.Graph(edges)
    checks = 0
    for e in edges:
        checks += 1
        if checks > budget:
            raise WitnessBudgetExceeded(f"Kuratowski search exceeded {budget} planarity checks")
        H.remove_edge(*e)
        if nx.check_planarity(H)[0]:
            H.add_edge(*e)
    return {(min(a, c), max(a, c)) for a, c in H.edges()}


def kuratowski_witness(G: MultiGraph, budget: int = 10_000) -> KuratowskiWitness | None:
    """A K5 or K3,3 subdivision inside ``G``, or None when ``G`` is planar."""
    if is_planar(G):
        return None
    edges = _minimal_nonplanar_edges(G, budget)
    deg: dict[int, int] = {}
    for a, c in edges:
        deg[a] = deg.get(a, 0) + 1
        deg[c] = deg.get(c, 0) + 1
    branch = sorted(v for v, d in deg.items() if d >= 3)
    paths = _trace_paths(edges, branch)
    if len(branch) == 5:
        return KuratowskiWitness("K5", tuple(branch), tuple(paths))
    # K3,3: split the branch vertices by which ones are joined by a path
    joined = {frozenset((p[0], p[-1])) for p in paths}
    first = branch[0]
    other = [v for v in branch if frozenset((first, v)) in joined]
    side = [v for v in branch if v not in other]
    return KuratowskiWitness("K33", tuple(side) + tuple(other), tuple(paths))


def validate_witness(G: MultiGraph, W: KuratowskiWitness) -> bool:
    """Paths are internally disjoint ``G``-paths realising every branch pair."""
    branch = list(W.branch)
    if len(set(branch)) != len(branch):
        return False
    if W.kind == "K5":
        if len(branch) != 5:
            return False
        need = {frozenset(p) for p in combinations(branch, 2)}
    elif W.kind == "K33":
        if len(branch) != 6:
            return False
        need = {frozenset((a, c)) for a in branch[:3] for c in branch[3:]}
    else:
        return False
    got = set()
    inner_used: set[int] = set()
    bset = set(branch)
    for p in W.paths:
        if len(p) < 2 or p[0] not in bset or p[-1] not in bset:
            return False
        for a, c in zip(p, p[1:]):
            if not G.adjacent(a, c):
                return False
        inner = p[1:-1]
        if set(inner) & bset or set(inner) & inner_used or len(set(inner)) != len(inner):
            return False
        inner_used |= set(inner)
        got.add(frozenset((p[0], p[-1])))
    return got == need and len(W.paths) == len(need)


def k33_with_class(G: MultiGraph, side: tuple[int, int, int]) -> KuratowskiWitness | None:
    """K3,3 subdivision with ``side`` as one colour class, if ``G - side``
    has three components each adjacent to all three vertices of ``side``."""
    full = (1 << G.n) - 1
    alive = full
    for s in side:
        alive &= ~(1 << s)
    good = []
    for comp in component_masks(G.adjacency, alive):
        if all(G.adjacency[s] & comp for s in side):
            good.append(comp)
        if len(good) == 3:
            break
    if len(good) < 3:
        return None
    centres = []
    paths = []
    for comp in good:
        centre, legs = _tripod(G, comp, side)
        centres.append(centre)
        paths.extend(legs)
    return KuratowskiWitness("K33", tuple(side) + tuple(centres), tuple(paths))


def _tripod(G: MultiGraph, comp: int, side) -> tuple[int, list[tuple[int, ...]]]:
    """Median of three attachment vertices in a spanning tree of ``comp``,
    with the tree paths from it, each extended by one edge into ``side``."""
    verts = [v for v in range(G.n) if comp >> v & 1]
    root = verts[0]
    parent = {root: None}
    order = [root]
    for x in order:
        for y in G.neighbors(x):
            if comp >> y & 1 and y not in parent:
                parent[y] = x
                order.append(y)

    def to_root(x):
        out = [x]
        while parent[out[-1]] is not None:
            out.append(parent[out[-1]])
        return out

    def tree_path(x, y):
        px, py = to_root(x), to_root(y)
        common = set(px) & set(py)
        i = next(k for k, z in enumerate(px) if z in common)
        j = py.index(px[i])
        return px[:i + 1] + py[:j][::-1]

    attach = [next(x for x in verts if G.adjacent(x, s)) for s in side]
    a, b, c = attach
    centre = (set(tree_path(a, b)) & set(tree_path(b, c)) & set(tree_path(a, c))).pop()
    legs = [tuple(tree_path(centre, x)) + (s,) for x, s in zip(attach, side)]
    # the witness lists paths from the side vertex towards the centre
    return centre, [tuple(reversed(p)) for p in legs]
