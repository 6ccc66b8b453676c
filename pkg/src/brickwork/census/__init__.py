"""Exhaustive small-graph generation and the verification suites built on it."""

from .analysis import AnalysisReport, analyze, canonical_string, reports_to_csv
from .generate import KNOWN_CONNECTED_COUNTS, generate_connected_graphs
from .suites import SuiteResult, corpus, corpus_bricks, engine_corpus, engine_suites, lemma_suites
from .theorem import (
    MainTheoremVerdict,
    check_graph,
    hub_spoke_doublings,
    odd_wheel_centres,
    verify_main_theorem,
    verify_multigraph_clause,
)
from .wheels import (
    NotABrick,
    WheelSpliceInstance,
    wheel_splice_census,
    wheel_splice_instances,
    wheel_splice_predicate,
    wiwj_census,
    wiwj_predicate,
)

WiWjInstance = WheelSpliceInstance

__all__ = [
    "AnalysisReport", "KNOWN_CONNECTED_COUNTS", "MainTheoremVerdict", "NotABrick", "SuiteResult",
    "WheelSpliceInstance", "WiWjInstance", "analyze", "canonical_string", "check_graph", "corpus",
    "corpus_bricks", "engine_corpus", "engine_suites", "generate_connected_graphs",
    "hub_spoke_doublings", "lemma_suites", "odd_wheel_centres", "reports_to_csv",
    "verify_main_theorem", "verify_multigraph_clause", "wheel_splice_census",
    "wheel_splice_instances", "wheel_splice_predicate", "wiwj_census", "wiwj_predicate",
]
