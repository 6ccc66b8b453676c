import random

import pytest
from hypothesis import strategies as st

from brickwork.graph import MultiGraph, relabel


@st.composite
def multigraphs(draw, min_n=1, max_n=8, max_m=16, simple=False, connected=False):
    n = draw(st.integers(min_n, max_n))
    if n < 2:
        return MultiGraph(n)
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    pairs = draw(st.lists(pair, max_size=max_m))
    if simple:
        pairs = sorted({(min(p), max(p)) for p in pairs})
    if connected:
        # a random spanning path keeps the graph connected
        order = draw(st.permutations(range(n)))
        extra = [(order[i], order[i + 1]) for i in range(n - 1)]
        pairs = list(pairs) + extra
        if simple:
            pairs = sorted({(min(p), max(p)) for p in pairs})
    return MultiGraph.from_pairs(n, pairs)


def shuffled(G: MultiGraph, seed: int) -> MultiGraph:
    perm = list(range(G.n))
    random.Random(seed).shuffle(perm)
    return relabel(G, perm)


@pytest.fixture(scope="session")
def corpus8():
    from brickwork.census.suites import corpus

    return corpus(8)


@pytest.fixture(scope="session")
def bricks8():
    from brickwork.census.suites import corpus_bricks

    return corpus_bricks(8)
