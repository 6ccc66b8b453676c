"""Canonical labelling by colour refinement plus individualisation.

Good enough up to roughly sixteen vertices. The certificate is the
upper-triangle multiplicity matrix under the lexicographically largest
leaf ordering, so two multigraphs are isomorphic iff their certificates
are equal.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import Edge, MultiGraph


def _matrix(G: MultiGraph) -> tuple[tuple[int, ...], ...]:
    mat = [[0] * G.n for _ in range(G.n)]
    for e in G.edges:
        mat[e.u][e.v] += 1
        mat[e.v][e.u] += 1
    return tuple(tuple(r) for r in mat)


def _refine(nbrs, colours: list[int]) -> list[int]:
    """Equitable refinement; colours stay dense and labelling-invariant."""
    n = len(colours)
    ncol = len(set(colours))
    while True:
        sigs = [
            (colours[v], tuple(sorted((colours[w], k) for w, k in nbrs[v])))
            for v in range(n)
        ]
        order = sorted(set(sigs))
        index = {s: i for i, s in enumerate(order)}
        new = [index[s] for s in sigs]
        if len(order) == ncol:
            return new
        colours, ncol = new, len(order)


def _twins(nbrs, a: int, b: int) -> bool:
    na = {w: k for w, k in nbrs[a] if w != b}
    nb = {w: k for w, k in nbrs[b] if w != a}
    return na == nb


def _search(nbrs, mat, colours: list[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    n = len(colours)
    colours = _refine(nbrs, colours)
    if len(set(colours)) == n:
        order = sorted(range(n), key=colours.__getitem__)
        code = tuple(mat[order[i]][order[j]] for j in range(n) for i in range(j))
        return code, tuple(order)
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colours):
        cells.setdefault(c, []).append(v)
    target_colour = min(c for c, vs in cells.items() if len(vs) > 1)
    cell = cells[target_colour]
    best = None
    tried: list[int] = []
    for v in cell:
        # swapping two twins in one cell is an automorphism of the coloured graph
        if any(_twins(nbrs, v, w) for w in tried):
            continue
        tried.append(v)
        split = [2 * c + (1 if c == target_colour and x != v else 0) for x, c in enumerate(colours)]
        result = _search(nbrs, mat, split)
        if best is None or result[0] > best[0]:
            best = result
    return best


def canonical_labeling(G: MultiGraph, colours: list[int] | None = None):
    """``(certificate, order)``: ``order[i]`` is the vertex placed at position ``i``."""
    mat = _matrix(G)
    nbrs = [[(w, mat[v][w]) for w in range(G.n) if mat[v][w]] for v in range(G.n)]
    start = list(colours) if colours is not None else [0] * G.n
    code, order = _search(nbrs, mat, start)
    return (G.n, tuple(start[v] for v in order) if colours is not None else (), code), order


@lru_cache(maxsize=65536)
def canonical_form(G: MultiGraph) -> tuple:
    """Hashable isomorphism invariant that is also complete."""
    return canonical_labeling(G)[0]


def canonical_graph(G: MultiGraph) -> MultiGraph:
    """Relabel ``G`` into its canonical vertex order; edges sorted, ids dense."""
    _, order = canonical_labeling(G)
    pos = [0] * G.n
    for i, v in enumerate(order):
        pos[v] = i
    pairs = sorted(
        (min(pos[e.u], pos[e.v]), max(pos[e.u], pos[e.v])) for e in G.edges
    )
    return MultiGraph(G.n, tuple(Edge(a, b, i) for i, (a, b) in enumerate(pairs)))


def is_isomorphic(G: MultiGraph, H: MultiGraph) -> bool:
    if G.n != H.n or G.m != H.m:
        return False
    if sorted(G.degree(v) for v in range(G.n)) != sorted(H.degree(v) for v in range(H.n)):
        return False
    return canonical_form(G) == canonical_form(H)
