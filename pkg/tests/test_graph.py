import networkx as nx
import pytest
from hypothesis import given, settings

from brickwork.graph import (
    GraphError,
    MultiGraph,
    SpliceMap,
    add_parallel,
    bipartition,
    complete,
    complete_bipartite,
    contract,
    cycle,
    delete_edges,
    edge_cut,
    is_connected,
    is_three_connected,
    named_graph,
    odd_wheel,
    parallel_classes,
    path,
    splice,
    underlying_simple,
    wheel,
)
from brickwork.canon import is_isomorphic

from .conftest import multigraphs


def degrees(G):
    return sorted(G.degree(v) for v in range(G.n))


def test_named_graph_sizes():
    assert (named_graph("k4").n, named_graph("k4").m) == (4, 6)
    c6 = named_graph("c6bar")
    assert (c6.n, c6.m) == (6, 9) and degrees(c6) == [3] * 6
    r8 = named_graph("r8")
    assert (r8.n, r8.m) == (8, 12) and degrees(r8) == [3] * 8
    assert (named_graph("w5").n, named_graph("w5").m) == (6, 10)
    assert (named_graph("w7").n, named_graph("w7").m) == (8, 14)


def test_c6bar_is_hexagon_complement():
    ref = nx.complement(nx.cycle_graph(6))
    G = named_graph("c6bar")
    assert nx.is_isomorphic(nx.Graph(list(G.pairs())), ref)


def test_unknown_name():
    with pytest.raises(GraphError):
        named_graph("petersen")


def test_odd_wheel():
    assert is_isomorphic(odd_wheel(3), complete(4))
    W = odd_wheel(5, [2, 1, 1, 1, 1])
    assert W.m == 11
    assert [c for c in parallel_classes(W) if len(c) > 1] == [tuple(W.edges_between(5, 0))]
    assert sorted(underlying_simple(W).pairs()) == sorted(odd_wheel(5).pairs())
    with pytest.raises(GraphError):
        odd_wheel(4)
    with pytest.raises(GraphError):
        odd_wheel(5, [1, 1])


def test_contract_examples():
    W5 = odd_wheel(5)
    H, _ = contract(W5, {2})
    assert (H.n, H.m) == (6, 10) and is_isomorphic(H, W5)
    K, _ = contract(complete(4), {0, 1})
    assert (K.n, K.m) == (3, 5)
    assert max(len(c) for c in parallel_classes(K)) == 2
    C6 = named_graph("c6bar")
    A, _ = contract(C6, {0, 2, 4})
    assert is_isomorphic(underlying_simple(A), complete(4))


def test_contract_rejects_trivial_shores():
    with pytest.raises(GraphError):
        contract(complete(4), set())
    with pytest.raises(GraphError):
        contract(complete(4), range(4))


def test_edge_cut_examples():
    K4 = complete(4)
    assert edge_cut(K4, {0}) == frozenset(K4.incident(0))
    W5 = odd_wheel(5)
    assert edge_cut(W5, range(5)) == frozenset(range(5, 10))
    assert len(edge_cut(named_graph("c6bar"), {0, 2, 4})) == 3


def test_splice_k4_k4():
    K4 = odd_wheel(3)
    theta = tuple(zip(K4.incident(0), K4.incident(0)))
    S = splice(K4, K4, SpliceMap(0, 0, theta))
    assert (S.n, S.m) == (6, 9) and degrees(S) == [3] * 6


def test_splice_degree_mismatch():
    with pytest.raises(GraphError, match="degree mismatch"):
        splice(odd_wheel(5), odd_wheel(3), SpliceMap(5, 0, ()))


def test_splice_bad_theta():
    K4 = odd_wheel(3)
    inc = K4.incident(0)
    with pytest.raises(GraphError):
        splice(K4, K4, SpliceMap(0, 0, ((inc[0], inc[0]), (inc[0], inc[1]), (inc[1], inc[2]))))


def test_basic_predicates():
    assert bipartition(cycle(6)) == (frozenset({0, 2, 4}), frozenset({1, 3, 5}))
    assert bipartition(cycle(5)) is None
    assert is_three_connected(complete(4))
    assert not is_three_connected(cycle(6))
    assert is_three_connected(complete_bipartite(3, 3))
    assert not is_connected(MultiGraph.from_pairs(4, [(0, 1), (2, 3)]))
    assert is_connected(path(5))


def test_edge_ids_stable():
    W = odd_wheel(5)
    D = delete_edges(W, [3, 7])
    assert set(D.edge_ids) == set(W.edge_ids) - {3, 7}
    P = add_parallel(W, 6)
    assert P.m == 11 and len(P.edges_between(*W.ends(6))) == 2
    with pytest.raises(GraphError):
        MultiGraph.from_pairs(3, [(0, 0)])
    with pytest.raises(GraphError):
        MultiGraph.from_pairs(3, [(0, 3)])


def test_wheel_planar_shape():
    W = wheel(6)
    assert (W.n, W.m) == (7, 12)


@settings(max_examples=60, deadline=None)
@given(multigraphs(min_n=2, max_n=8))
def test_contract_counts(G):
    X = frozenset(range(G.n // 2 or 1))
    if len(X) >= G.n:
        return
    H, vmap = contract(G, X)
    inside = sum(1 for e in G.edges if e.u in X and e.v in X)
    assert H.n == G.n - len(X) + 1
    assert H.m == G.m - inside
    assert set(H.edge_ids) <= set(G.edge_ids)
    assert len({vmap[x] for x in X}) == 1


@settings(max_examples=60, deadline=None)
@given(multigraphs(min_n=2, max_n=8))
def test_handshake_and_cut(G):
    assert sum(G.degree(v) for v in range(G.n)) == 2 * G.m
    X = frozenset(range(0, G.n, 2))
    if 0 < len(X) < G.n:
        cut = edge_cut(G, X)
        assert all((e.u in X) != (e.v in X) for e in G.edges if e.id in cut)
        assert len(cut) == sum(1 for e in G.edges if (e.u in X) != (e.v in X))


@settings(max_examples=60, deadline=None)
@given(multigraphs(min_n=1, max_n=8))
def test_connectivity_agrees_with_networkx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.pairs())
    assert is_connected(G) == nx.is_connected(H)
    assert (bipartition(G) is not None) == nx.is_bipartite(H)
