import networkx as nx
from hypothesis import given, settings

from brickwork.census.wheels import WheelSpliceInstance, nonplanarity_witness
from brickwork.graph import MultiGraph, complete, complete_bipartite, named_graph, odd_wheel, wheel
from brickwork.planarity import (
    KuratowskiWitness,
    euler_bound_ok,
    is_planar,
    k33_with_class,
    kuratowski_witness,
    validate_witness,
)

from .conftest import multigraphs

PETERSEN = MultiGraph.from_pairs(10, list(nx.petersen_graph().edges()))


def test_verdicts():
    assert not is_planar(complete(5))
    assert not is_planar(complete_bipartite(3, 3))
    assert all(is_planar(wheel(k)) for k in range(3, 10))
    assert is_planar(named_graph("c6bar")) and is_planar(named_graph("r8"))
    assert is_planar(odd_wheel(5, [3, 1, 2, 1, 1]))


def test_witness_examples():
    K33 = complete_bipartite(3, 3)
    W = kuratowski_witness(K33)
    assert W.kind == "K33" and validate_witness(K33, W)
    assert all(len(p) == 2 for p in W.paths)
    W = kuratowski_witness(complete(5))
    assert W.kind == "K5" and validate_witness(complete(5), W)
    assert kuratowski_witness(named_graph("w5")) is None
    W = kuratowski_witness(PETERSEN)
    assert validate_witness(PETERSEN, W)


def test_k33_with_given_class():
    K33 = complete_bipartite(3, 3)
    W = k33_with_class(K33, (0, 1, 2))
    assert W.branch[:3] == (0, 1, 2) and validate_witness(K33, W)
    assert k33_with_class(K33, (0, 1, 3)) is None


def test_wheel_splice_witness():
    # W5 at its hub against W5 at a rim vertex whose spoke is tripled
    theta = ((5, 0), (6, 5), (7, 4), (8, 6), (9, 7))
    inst = WheelSpliceInstance(5, 5, (1, 1, 1, 1, 1), (3, 1, 1, 1, 1), 5, 0, theta)
    G = inst.graph
    assert not is_planar(G)
    W = nonplanarity_witness(inst)
    assert W is not None and W.kind == "K33" and validate_witness(G, W)


def test_corrupted_witnesses_rejected():
    K33 = complete_bipartite(3, 3)
    W = kuratowski_witness(K33)
    assert not validate_witness(K33, KuratowskiWitness("K33", W.branch, W.paths[:-1]))
    assert not validate_witness(K33, KuratowskiWitness("K5", W.branch[:5], W.paths))
    bad = list(W.paths)
    bad[0] = (bad[0][0], bad[1][-1])
    assert not validate_witness(K33, KuratowskiWitness("K33", W.branch, tuple(bad)))
    swapped = W.branch[1:4] + W.branch[:1] + W.branch[4:]
    assert not validate_witness(K33, KuratowskiWitness("K33", swapped, W.paths))


@settings(max_examples=120, deadline=None)
@given(multigraphs(min_n=5, max_n=9, max_m=24, simple=True))
def test_witness_iff_nonplanar(G):
    W = kuratowski_witness(G)
    if W is None:
        assert is_planar(G)
    else:
        assert not is_planar(G)
        assert validate_witness(G, W)
    if not euler_bound_ok(G):
        assert not is_planar(G)
