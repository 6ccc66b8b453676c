"""Perfect matchings, Tutte barriers, forbidden edges.

Two independent engines answer matching questions: Edmonds' blossom
algorithm (``max_matching``) and exhaustive backtracking
(``max_matching_exhaustive`` / ``enumerate_perfect_matchings``). The
predicates that need every perfect matching share one cached table.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

import numpy as np

from .graph import MultiGraph, as_vertex_set, component_masks, delete_vertices, is_connected

DEFAULT_PM_CAP = int(os.environ.get("BRICKWORK_PM_CAP", "200000"))


class MatchingOverflow(RuntimeError):
    """More perfect matchings than the caller's cap allows."""

    def __init__(self, cap: int):
        super().__init__(f"perfect matching enumeration exceeded cap={cap}")
        self.cap = cap


# -- maximum matching ------------------------------------------------------

def _lowest_edge(G: MultiGraph, a: int, b: int) -> int:
    return min(G.edges_between(a, b))


def max_matching(G: MultiGraph) -> frozenset[int]:
    """Maximum-cardinality matching by Edmonds' blossom algorithm.

    Works on the underlying simple graph; between parallel edges the one
    with the lowest id is reported.
    """
    n = G.n
    adj = [G.neighbors(v) for v in range(n)]
    match = [-1] * n

    # greedy start; the augmenting phase fixes anything it misses
    for v in range(n):
        if match[v] < 0:
            for w in adj[v]:
                if match[w] < 0:
                    match[v], match[w] = w, v
                    break

    def lca(a, b, base, parent):
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] < 0:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark(v, b, child, base, blossom, parent):
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def augmenting_path(root):
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] >= 0 and parent[match[to]] >= 0):
                    b = lca(v, to, base, parent)
                    blossom = [False] * n
                    mark(v, b, to, base, blossom, parent)
                    mark(to, b, v, base, blossom, parent)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = b
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] < 0:
                    parent[to] = v
                    if match[to] < 0:
                        return to, parent
                    used[match[to]] = True
                    queue.append(match[to])
        return -1, parent

    for r in range(n):
        if match[r] >= 0:
            continue
        v, parent = augmenting_path(r)
        while v >= 0:
            pv = parent[v]
            nxt = match[pv]
            match[v], match[pv] = pv, v
            v = nxt
    return frozenset(_lowest_edge(G, v, match[v]) for v in range(n) if match[v] > v)


def max_matching_exhaustive(G: MultiGraph) -> frozenset[int]:
    """Maximum matching by plain backtracking; exponential, for cross-checks."""
    order = sorted(G.edges, key=lambda e: e.id)
    best: list[int] = []
    cur: list[int] = []

    def rec(i: int, used: int):
        nonlocal best
        if len(cur) > len(best):
            best = list(cur)
        room = min(len(order) - i, (G.n - 2 * len(cur)) // 2)
        if len(cur) + room <= len(best):
            return
        e = order[i]
        bits = (1 << e.u) | (1 << e.v)
        if not used & bits:
            cur.append(e.id)
            rec(i + 1, used | bits)
            cur.pop()
        rec(i + 1, used)

    rec(0, 0)
    return frozenset(best)


def is_matching(G: MultiGraph, M: Iterable[int]) -> bool:
    seen = set()
    for eid in M:
        u, v = G.ends(eid)
        if u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def is_perfect_matching(G: MultiGraph, M: Iterable[int]) -> bool:
    M = list(M)
    return is_matching(G, M) and 2 * len(M) == G.n


def has_perfect_matching(G: MultiGraph) -> bool:
    return G.n % 2 == 0 and 2 * len(max_matching(G)) == G.n


# -- enumeration -------------------------------------------------------------

def _pm_masks(G: MultiGraph, cap: int) -> list[int]:
    """Every perfect matching as a bitmask over edge positions."""
    if G.n % 2:
        return []
    inc = [[(G.position(eid), G.other_end(eid, v)) for eid in sorted(G.incident(v))] for v in range(G.n)]
    out: list[int] = []
    full = (1 << G.n) - 1

    def rec(covered: int, mask: int):
        if covered == full:
            out.append(mask)
            if len(out) > cap:
                raise MatchingOverflow(cap)
            return
        free = ~covered & full
        v = (free & -free).bit_length() - 1
        cv = covered | (1 << v)
        for pos, w in inc[v]:
            if not cv >> w & 1:
                rec(cv | (1 << w), mask | (1 << pos))

    rec(0, 0)
    return out


def set_pm_cap(cap: int) -> None:
    """Change the default enumeration cap (also settable via ``BRICKWORK_PM_CAP``)."""
    global DEFAULT_PM_CAP
    if cap < 1:
        raise ValueError("cap must be positive")
    DEFAULT_PM_CAP = cap
    pm_table.cache_clear()


def enumerate_perfect_matchings(G: MultiGraph, cap: int | None = None) -> list[frozenset[int]]:
    """All perfect matchings in a fixed backtracking order.

    Raises ``MatchingOverflow`` when there are more than ``cap``.
    """
    cap = DEFAULT_PM_CAP if cap is None else cap
    if cap < 1:
        raise ValueError("cap must be positive")
    ids = G.edges
    return [frozenset(ids[i].id for i in _positions(mask)) for mask in _pm_masks(G, cap)]


def _positions(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class PMTable:
    """All perfect matchings of one graph, as bitmasks and a 0/1 matrix."""

    graph: MultiGraph
    masks: tuple[int, ...]
    matrix: np.ndarray  # shape (#PM, m), float32 0/1

    @property
    def count(self) -> int:
        return len(self.masks)

    @property
    def union(self) -> int:
        u = 0
        for mask in self.masks:
            u |= mask
        return u


@lru_cache(maxsize=8192)
def pm_table(G: MultiGraph, cap: int | None = None) -> PMTable:
    masks = _pm_masks(G, DEFAULT_PM_CAP if cap is None else cap)
    mat = np.zeros((len(masks), G.m), dtype=np.float32)
    for r, mask in enumerate(masks):
        mat[r, _positions(mask)] = 1.0
    mat.setflags(write=False)
    return PMTable(G, tuple(masks), mat)


# -- Tutte machinery -------------------------------------------------------

def odd_components(G: MultiGraph, S: Iterable[int]) -> int:
    """Number of odd components of ``G - S``."""
    S = as_vertex_set(G, S)
    alive = (1 << G.n) - 1
    for s in S:
        alive &= ~(1 << s)
    return sum(1 for c in component_masks(G.adjacency, alive) if c.bit_count() % 2)


def is_barrier(G: MultiGraph, S: Iterable[int]) -> bool:
    S = as_vertex_set(G, S)
    return bool(S) and odd_components(G, S) == len(S)


def tutte_condition(G: MultiGraph) -> bool:
    """Brute force over all vertex subsets: ``o(G - X) <= |X|`` for every X."""
    full = (1 << G.n) - 1
    for X in range(1 << G.n):
        odd = sum(1 for c in component_masks(G.adjacency, full & ~X) if c.bit_count() % 2)
        if odd > X.bit_count():
            return False
    return True


def barriers(G: MultiGraph) -> list[frozenset[int]]:
    """Every barrier of ``G``, by exhaustive search over vertex subsets."""
    full = (1 << G.n) - 1
    out = []
    for X in range(1, 1 << G.n):
        odd = sum(1 for c in component_masks(G.adjacency, full & ~X) if c.bit_count() % 2)
        if odd == X.bit_count():
            out.append(frozenset(i for i in range(G.n) if X >> i & 1))
    return out


def is_forbidden(G: MultiGraph, eid: int) -> bool:
    """True iff no perfect matching of ``G`` uses edge ``eid``."""
    u, v = G.ends(eid)
    if G.n == 2:
        return False
    rest, _ = delete_vertices(G, (u, v))
    return not has_perfect_matching(rest)


def find_barrier_containing(G: MultiGraph, u: int, v: int) -> frozenset[int] | None:
    """Smallest (then lexicographically first) barrier containing ``u`` and ``v``."""
    others = [x for x in range(G.n) if x not in (u, v)]
    full = (1 << G.n) - 1
    base = (1 << u) | (1 << v)
    for k in range(len(others) + 1):
        for extra in combinations(others, k):
            S = base
            for x in extra:
                S |= 1 << x
            odd = sum(1 for c in component_masks(G.adjacency, full & ~S) if c.bit_count() % 2)
            if odd == k + 2:
                return frozenset((u, v, *extra))
    return None


def is_matching_covered(G: MultiGraph) -> bool:
    """Connected, at least two vertices, and every edge in some perfect matching."""
    if G.n < 2 or G.n % 2 or not is_connected(G):
        return False
    if not has_perfect_matching(G):
        return False
    return pm_table(G).union == (1 << G.m) - 1


def is_bicritical(G: MultiGraph) -> bool:
    if G.n < 2 or G.n % 2:
        return False
    if G.n == 2:
        return True
    for a, b in combinations(range(G.n), 2):
        rest, _ = delete_vertices(G, (a, b))
        if not has_perfect_matching(rest):
            return False
    return True
