import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brickwork.canon import is_isomorphic
from brickwork.cuts import (
    BudgetExceeded,
    brick_count,
    classify_cut,
    contractions,
    find_nontrivial_tight_cut,
    find_robust_cut,
    is_brace,
    is_brick,
    is_near_brick,
    is_solid,
    is_tight_cut,
    robust_refinement,
    tight_cut_decomposition,
)
from brickwork.graph import (
    SpliceMap,
    complete,
    complete_bipartite,
    cycle,
    edge_cut,
    named_graph,
    splice,
    underlying_simple,
)
from brickwork.matching import is_matching_covered

from .conftest import multigraphs


def brute_pms(G):
    for S in itertools.combinations(G.edge_ids, G.n // 2):
        if len({x for e in S for x in G.ends(e)}) == G.n:
            yield set(S)


def tight_oracle(G, X):
    cut = edge_cut(G, X)
    return all(len(M & cut) == 1 for M in brute_pms(G))


def star_splice(G, u, H, v):
    """Splice with theta pairing the two stars in incidence order."""
    return splice(G, H, SpliceMap(u, v, tuple(zip(G.incident(u), H.incident(v)))))


def k4_k33_k4():
    """K4 spliced onto two vertices of one colour class of K3,3."""
    G = star_splice(complete(4), 0, complete_bipartite(3, 3), 0)
    # K3,3 vertex 1 sits at index 3 after the first splice
    return star_splice(G, 3, complete(4), 0)


def test_opposite_classes_give_a_brick():
    G = star_splice(complete(4), 0, complete_bipartite(3, 3), 0)
    assert is_brick(star_splice(G, G.n - 1, complete(4), 0))


C6BAR_SHORE = frozenset({0, 2, 4})


def test_cut_classification_examples():
    W5 = named_graph("w5")
    r = classify_cut(W5, {0})
    assert r.trivial and r.tight
    C6 = named_graph("c6bar")
    r = classify_cut(C6, C6BAR_SHORE)
    assert r.separating and not r.tight and len(r.witness & r.cut) == 3
    r = classify_cut(cycle(6), {0, 1, 2})
    assert r.tight
    assert not classify_cut(cycle(6), {0, 1, 3}).separating


@pytest.mark.parametrize("name", ["k4", "w5", "w7", "c6bar", "r8"])
def test_fixture_bricks(name):
    G = named_graph(name)
    assert is_brick(G) and brick_count(G) == 1 and is_near_brick(G)


def test_braces_and_bipartite():
    assert not is_brick(cycle(6)) and brick_count(cycle(6)) == 0
    assert is_brace(complete_bipartite(3, 3))
    assert not is_brace(cycle(6))


def test_splice_with_brace_has_one_brick():
    G = star_splice(complete(4), 0, complete_bipartite(3, 3), 0)
    assert is_matching_covered(G) and not is_brick(G)
    X = find_nontrivial_tight_cut(G)
    assert X is not None and is_tight_cut(G, X)
    assert brick_count(G) == 1


def test_two_bricks():
    G = k4_k33_k4()
    assert is_matching_covered(G)
    assert brick_count(G) == 2 == brick_count(G, largest_first=True)
    D = tight_cut_decomposition(G)
    assert all(is_isomorphic(underlying_simple(B), complete(4)) for B in D.bricks)


def test_solid_fixtures():
    assert is_solid(named_graph("w5")) and is_solid(named_graph("w7")) and is_solid(complete(4))
    assert not is_solid(named_graph("c6bar"))
    assert not is_solid(named_graph("r8"))


def test_solid_budget_refusal():
    with pytest.raises(BudgetExceeded):
        is_solid(named_graph("w7"), max_n=6)
    with pytest.raises(BudgetExceeded):
        find_robust_cut(named_graph("w7"), max_n=6)


def test_robust_cut_fixtures():
    C6 = named_graph("c6bar")
    r = find_robust_cut(C6)
    assert r is not None and r.robust
    for part in contractions(C6, r.shore):
        assert is_isomorphic(underlying_simple(part), complete(4))
    assert find_robust_cut(named_graph("w5")) is None
    assert find_robust_cut(named_graph("r8")) is not None


def test_degenerate_refinement():
    C6 = named_graph("c6bar")
    ref = robust_refinement(C6, C6BAR_SHORE)
    assert ref.inner == ref.outer == C6BAR_SHORE
    H = ref.bipartite_part
    assert H.n == 2 and H.m == 3


def test_tight_routes_agree_on_fixtures():
    for G in (named_graph("c6bar"), named_graph("r8"), k4_k33_k4(), cycle(6)):
        for k in range(3, G.n - 2, 2):
            for X in itertools.combinations(range(G.n), k):
                assert is_tight_cut(G, X) == tight_oracle(G, X)


@settings(max_examples=60, deadline=None)
@given(multigraphs(min_n=4, max_n=8, max_m=14, connected=True), st.data())
def test_tight_routes_agree(G, data):
    if G.n % 2 or not is_matching_covered(G):
        return
    k = data.draw(st.sampled_from(range(1, G.n, 2)))
    X = data.draw(st.sets(st.integers(0, G.n - 1), min_size=k, max_size=k))
    assert is_tight_cut(G, X) == tight_oracle(G, X)


@settings(max_examples=40, deadline=None)
@given(multigraphs(min_n=4, max_n=8, max_m=14, connected=True))
def test_decomposition_order_independent(G):
    if G.n % 2 or not is_matching_covered(G):
        return
    assert brick_count(G) == brick_count(G, largest_first=True)
    assert is_brick(G) == (find_nontrivial_tight_cut(G) is None and not is_brace(G) and brick_count(G) == 1)
