"""Matching covered graphs, bricks and wheel-like bricks.

Core objects live in ``brickwork.graph``; matching, cut, removability and
planarity predicates in their own modules; exhaustive censuses in
``brickwork.census``.
"""

from .cuts import (
    brick_count,
    classify_cut,
    find_robust_cut,
    is_brace,
    is_brick,
    is_near_brick,
    is_solid,
    is_tight_cut,
    robust_refinement,
    tight_cut_decomposition,
)
from .graph import Edge, GraphError, MultiGraph, SpliceMap, contract, named_graph, odd_wheel, splice, wheel
from .matching import enumerate_perfect_matchings, is_matching_covered, max_matching
from .planarity import is_planar, kuratowski_witness
from .removable import is_near_bipartite, is_wheel_like, removable_classes, wheel_like_hubs

__all__ = [
    "Edge", "GraphError", "MultiGraph", "SpliceMap", "brick_count", "classify_cut", "contract",
    "enumerate_perfect_matchings", "find_robust_cut", "is_brace", "is_brick", "is_matching_covered",
    "is_near_bipartite", "is_near_brick", "is_planar", "is_solid", "is_tight_cut", "is_wheel_like",
    "kuratowski_witness", "max_matching", "named_graph", "odd_wheel", "removable_classes",
    "robust_refinement", "splice", "tight_cut_decomposition", "wheel", "wheel_like_hubs",
]
__version__ = "0.1.0"
