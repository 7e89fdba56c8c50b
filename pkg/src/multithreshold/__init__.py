"""Exact multithreshold representations of small graph families.

A graph is k-threshold when there are vertex ranks and k real thresholds
such that two vertices are adjacent exactly when an odd number of thresholds
sits at or below their rank sum.  This package builds optimal representations
for disjoint unions of triangles and K4s and for complete multipartite graphs
with parts of size 3 and 4, evaluates the closed-form threshold numbers,
certifies the coloring lemmas behind the lower bounds, and decides small
instances exhaustively with an exact LP oracle.
"""

from .exactnum import (
    Basis,
    FieldElement,
    RationalInterval,
    basis_from_json,
    basis_to_json,
    element_from_json,
    element_to_json,
    first_primes,
    fraction_from_str,
    fraction_to_str,
    min_positive_gap,
    sqrt_symbol,
)
from .graphs import (
    FORMAT_VERSION,
    CompleteMultipartite,
    DisjointCliques,
    ExplicitGraph,
    GraphSpec,
    Mismatch,
    Representation,
    VerificationReport,
    all_pairs,
    check_sum_disjointness,
    complement_representation,
    family_graph,
    graph_from_json,
    graph_to_json,
    load_representation,
    rank_sums,
    representation_from_json,
    representation_to_json,
    save_representation,
    verify,
)
from .theta import (
    BOUNDARY,
    INTERIOR,
    THETA_BY_FAMILY,
    ThetaResult,
    boundary_knx3,
    boundary_knx4,
    boundary_nk3,
    boundary_nk4,
    max_parts_bound,
    theta_knx3,
    theta_knx4,
    theta_nk3,
    theta_nk4,
)
from .colorings import (
    CertificateViolation,
    ColorTable,
    ViolationKind,
    check_extreme_color_unique,
    check_k4_half_triangle,
    check_lone_color_unique,
    check_no_two_same_color,
    clique_color_multiset,
    color_table,
)
from .constructions import (
    QuadAssignment,
    QuadSums,
    TripleAssignment,
    check_gap_intervals,
    construct_knx3,
    construct_knx4,
    construct_nk3,
    construct_nk4,
    k4_ranks,
    mono_quad,
    pair_assignment,
    select_epsilon,
    shifted_pair_assignment,
    triple_assignment,
    triple_ranks,
)
from .oracle import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    IntervalAssignment,
    LPProblem,
    LPWitness,
    OracleResult,
    build_lp,
    is_k_threshold,
    lp_feasible,
    threshold_number,
)

__version__ = "0.1.0"

__all__ = [
    "Basis",
    "FieldElement",
    "RationalInterval",
    "basis_from_json",
    "basis_to_json",
    "element_from_json",
    "element_to_json",
    "first_primes",
    "fraction_from_str",
    "fraction_to_str",
    "min_positive_gap",
    "sqrt_symbol",
    "FORMAT_VERSION",
    "CompleteMultipartite",
    "DisjointCliques",
    "ExplicitGraph",
    "GraphSpec",
    "Mismatch",
    "Representation",
    "VerificationReport",
    "all_pairs",
    "check_sum_disjointness",
    "complement_representation",
    "family_graph",
    "graph_from_json",
    "graph_to_json",
    "load_representation",
    "rank_sums",
    "representation_from_json",
    "representation_to_json",
    "save_representation",
    "verify",
    "BOUNDARY",
    "INTERIOR",
    "THETA_BY_FAMILY",
    "ThetaResult",
    "boundary_knx3",
    "boundary_knx4",
    "boundary_nk3",
    "boundary_nk4",
    "max_parts_bound",
    "theta_knx3",
    "theta_knx4",
    "theta_nk3",
    "theta_nk4",
    "CertificateViolation",
    "ColorTable",
    "ViolationKind",
    "check_extreme_color_unique",
    "check_k4_half_triangle",
    "check_lone_color_unique",
    "check_no_two_same_color",
    "clique_color_multiset",
    "color_table",
    "QuadAssignment",
    "QuadSums",
    "TripleAssignment",
    "check_gap_intervals",
    "construct_knx3",
    "construct_knx4",
    "construct_nk3",
    "construct_nk4",
    "k4_ranks",
    "mono_quad",
    "pair_assignment",
    "select_epsilon",
    "shifted_pair_assignment",
    "triple_assignment",
    "triple_ranks",
    "DEFAULT_BUDGET",
    "BudgetExceededError",
    "IntervalAssignment",
    "LPProblem",
    "LPWitness",
    "OracleResult",
    "build_lp",
    "is_k_threshold",
    "lp_feasible",
    "threshold_number",
    "__version__",
]
