import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from brickwork.canon import canonical_form, canonical_graph, is_isomorphic
from brickwork.graph import MultiGraph, cycle, named_graph, odd_wheel, path

from .conftest import multigraphs, shuffled


def as_nx(G):
    H = nx.MultiGraph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.pairs())
    return H


@settings(max_examples=100, deadline=None)
@given(multigraphs(max_n=8), st.integers(0, 10**6))
def test_form_invariant_under_relabelling(G, seed):
    assert canonical_form(shuffled(G, seed)) == canonical_form(G)


@settings(max_examples=100, deadline=None)
@given(multigraphs(max_n=7, max_m=12), multigraphs(max_n=7, max_m=12))
def test_isomorphism_agrees_with_networkx(G, H):
    assert is_isomorphic(G, H) == nx.is_isomorphic(as_nx(G), as_nx(H))


@settings(max_examples=50, deadline=None)
@given(multigraphs(max_n=8))
def test_canonical_graph_is_isomorphic_and_fixed(G):
    C = canonical_graph(G)
    assert is_isomorphic(C, G)
    assert canonical_graph(C).pairs() == C.pairs()


def test_distinguishes_fixtures():
    forms = {canonical_form(named_graph(x)) for x in ("k4", "c6bar", "r8", "w5", "w7")}
    assert len(forms) == 5
    assert not is_isomorphic(cycle(6), path(6))
    doubled = odd_wheel(5, [2, 1, 1, 1, 1])
    assert is_isomorphic(doubled, odd_wheel(5, [1, 2, 1, 1, 1]))
    assert not is_isomorphic(doubled, MultiGraph.from_pairs(6, list(odd_wheel(5).pairs()) + [(0, 1)]))
