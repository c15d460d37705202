"""Exact k-weights of weighted graphs and realization of (n-1)-dissimilarity families."""

from .errors import (
    Disconnected,
    DissimError,
    DuplicateEdge,
    ExternalNotVertex,
    NonPositiveWeight,
    NotRealizable,
    ParseError,
    PreconditionViolated,
    SelfLoop,
    TooLarge,
    UnknownEdge,
    VerificationFailed,
    WrongN,
)
from .family import ConditionReport, DissimilarityFamily, Realization, Verdict, family
from .graph import WeightedGraph, decode, encode, format_rational, subgraph_weight, to_dot, to_rational, validate
from .graphs import (
    check_graph_exact_n,
    check_n4_internal,
    construct_n4_internal,
    construct_repeated_max,
    construct_triangle,
    construct_unique_max,
    implied_inequalities,
    realize_graph,
)
from .steiner import (
    DissimilarityVector,
    SteinerResult,
    dissimilarity_vector,
    hat_vector,
    hat_vector_brute,
    steiner_brute,
    steiner_weight,
)
from .trees import (
    check_tree_exact_n,
    check_tree_ge_n,
    check_tree_leaves,
    construct_caterpillar,
    construct_star_center_new,
    construct_star_center_r,
    realize_tree,
)
from .classes import CLASSES, check_all, check_class, realize

__version__ = "0.1.0"
