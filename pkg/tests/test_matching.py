import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from brickwork.graph import (
    complete,
    complete_bipartite,
    cycle,
    delete_edges,
    named_graph,
    path,
)
from brickwork.matching import (
    MatchingOverflow,
    barriers,
    enumerate_perfect_matchings,
    find_barrier_containing,
    has_perfect_matching,
    is_bicritical,
    is_forbidden,
    is_matching,
    is_matching_covered,
    is_perfect_matching,
    max_matching,
    max_matching_exhaustive,
    odd_components,
    tutte_condition,
)

from .conftest import multigraphs


def brute_pm_count(G):
    """Oracle: test every edge subset of size n/2."""
    if G.n % 2:
        return 0
    return sum(
        1
        for S in itertools.combinations(G.edge_ids, G.n // 2)
        if len({x for e in S for x in G.ends(e)}) == G.n
    )


def spoke(W, i):
    k = W.n - 1
    return W.edges_between(k, i)[0]


@pytest.mark.parametrize(
    "G,count",
    [
        (complete(4), 3),
        (named_graph("w5"), 5),
        (named_graph("c6bar"), 4),
        (named_graph("r8"), 5),
        (complete_bipartite(3, 3), 6),
        (complete(6), 15),
        (cycle(5), 0),
    ],
)
def test_pm_counts(G, count):
    assert len(enumerate_perfect_matchings(G)) == count == brute_pm_count(G)


def test_max_matching_examples():
    assert len(max_matching(complete(4))) == 2
    assert len(max_matching(cycle(5))) == 2
    assert len(max_matching(named_graph("w5"))) == 3


def test_overflow_signal():
    with pytest.raises(MatchingOverflow):
        enumerate_perfect_matchings(complete(8), cap=10)


def test_odd_components_examples():
    K4, W5 = complete(4), named_graph("w5")
    assert odd_components(K4, {0}) == 1
    # W5 - {hub, 0, 2} leaves {1} and {3, 4}
    assert odd_components(W5, {5, 0, 2}) == 1
    assert odd_components(cycle(5), set()) == 1
    assert odd_components(complete(4), set()) == 0


def test_forbidden_examples():
    assert not any(is_forbidden(complete(4), e) for e in range(6))
    assert is_forbidden(path(4), 1)
    assert not is_forbidden(path(4), 0)


def test_barrier_after_spoke_deletion():
    W5 = named_graph("w5")
    G = delete_edges(W5, [spoke(W5, 1)])
    assert find_barrier_containing(G, 0, 2) == frozenset({0, 2})
    W7 = named_graph("w7")
    H = delete_edges(W7, [spoke(W7, 3)])
    assert find_barrier_containing(H, 2, 4) is not None
    for a, b in itertools.combinations(range(4), 2):
        assert find_barrier_containing(complete(4), a, b) is None


def test_matching_covered_and_bicritical():
    W5 = named_graph("w5")
    assert is_matching_covered(W5) and is_bicritical(W5)
    assert is_matching_covered(cycle(6)) and not is_bicritical(cycle(6))
    assert not is_matching_covered(complete_bipartite(1, 3))
    assert not is_matching_covered(path(4))


@settings(max_examples=150, deadline=None)
@given(multigraphs(max_n=9, max_m=16))
def test_blossom_matches_exhaustive(G):
    M = max_matching(G)
    assert is_matching(G, M)
    assert len(M) == len(max_matching_exhaustive(G))


@settings(max_examples=100, deadline=None)
@given(multigraphs(max_n=8, max_m=14))
def test_matching_size_agrees_with_networkx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.pairs())
    assert len(max_matching(G)) == len(nx.max_weight_matching(H, maxcardinality=True))


@settings(max_examples=80, deadline=None)
@given(multigraphs(max_n=8, max_m=12))
def test_enumeration_matches_oracle(G):
    pms = enumerate_perfect_matchings(G)
    assert len(set(pms)) == len(pms) == brute_pm_count(G)
    assert all(is_perfect_matching(G, M) for M in pms)
    assert has_perfect_matching(G) == bool(pms) == tutte_condition(G)


@settings(max_examples=60, deadline=None)
@given(multigraphs(min_n=2, max_n=8, max_m=14, connected=True))
def test_forbidden_iff_barrier_holds_both_ends(G):
    if not has_perfect_matching(G):
        return
    bars = barriers(G)
    for e in G.edges:
        via_barrier = any(e.u in B and e.v in B for B in bars)
        assert is_forbidden(G, e.id) == via_barrier
        assert (find_barrier_containing(G, e.u, e.v) is not None) == via_barrier
