"""Degree sequences whose realizations contain every 2-tree on k vertices."""

from .degseq import (
    SequenceError,
    check_sequence,
    erdos_gallai_violation,
    format_sequence,
    is_graphic,
    layoff,
    min_order,
    parse_sequence,
    realize,
    sigma,
    thresholds,
    yin_li_sufficient,
)
from .graphs import SimpleGraph, canonical_key, is_isomorphic, make_named, subgraph_contains
from .hosts import make_host, make_M, universal_host, verify_universal
from .potential import (
    Falsification,
    HypothesisError,
    build_construction,
    classify_case,
    construct_realization_all_two_trees,
    pi_chain,
    reconstruct,
    rho,
)
from .twotree import enumerate_two_trees, is_two_tree, make_F, make_T

__version__ = "0.1.0"
