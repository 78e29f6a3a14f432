"""Cliques and structure in graphs with no induced 4-cycle.

Certified clique extraction, structure decomposition for independence
number at most 2, generators for the sharp extremal families, exact
small-graph oracles, and deterministic verification suites.
"""

__version__ = "0.1.0"

from .graph import (
    ORACLE_LIMIT_DEFAULT,
    FoundC4,
    Graph,
    GraphInputError,
    InvariantViolation,
    OddCycle,
    OracleLimitError,
    SetClass,
    VertexSet,
    bipartition,
    build_graph,
    classify_set,
    common_neighbors,
    complement,
    find_independent_set_of_size,
    find_induced_c4,
    greedy_maximal_independent_set,
    has_induced_c4_naive,
    induced_subgraph,
    is_c4_free,
    max_clique_exact,
    max_independent_set_exact,
)
from .generators import (
    RNG_NAME,
    SplitMix64,
    clique_substitution,
    cycle_power,
    random_c4free,
    w5_base,
    w5_blowup,
)
from .structure import (
    HypothesisViolation,
    StructureCertificate,
    alpha2_decompose,
    clique_from_certificate,
    find_certificate_violation,
    verify_certificate,
)
from .extraction import (
    CliqueCertificate,
    DominatingPair,
    best_pair_intersection,
    check_certificate,
    degree_square_census,
    extract_dirac,
    extract_general,
    extract_large_alpha,
    extract_regular,
    extract_triple,
    find_dominating_nonadjacent_pair,
)
from .edgelist import ParseError, parse_graph, serialize_graph
from .suites import Report, SuiteConfig, run_suite

__all__ = [
    "ORACLE_LIMIT_DEFAULT",
    "RNG_NAME",
    "CliqueCertificate",
    "DominatingPair",
    "FoundC4",
    "Graph",
    "GraphInputError",
    "HypothesisViolation",
    "InvariantViolation",
    "OddCycle",
    "OracleLimitError",
    "ParseError",
    "Report",
    "SetClass",
    "SplitMix64",
    "StructureCertificate",
    "SuiteConfig",
    "VertexSet",
    "alpha2_decompose",
    "best_pair_intersection",
    "bipartition",
    "build_graph",
    "check_certificate",
    "classify_set",
    "clique_from_certificate",
    "clique_substitution",
    "common_neighbors",
    "complement",
    "cycle_power",
    "degree_square_census",
    "extract_dirac",
    "extract_general",
    "extract_large_alpha",
    "extract_regular",
    "extract_triple",
    "find_certificate_violation",
    "find_dominating_nonadjacent_pair",
    "find_independent_set_of_size",
    "find_induced_c4",
    "greedy_maximal_independent_set",
    "has_induced_c4_naive",
    "induced_subgraph",
    "is_c4_free",
    "max_clique_exact",
    "max_independent_set_exact",
    "parse_graph",
    "random_c4free",
    "run_suite",
    "serialize_graph",
    "verify_certificate",
    "w5_base",
    "w5_blowup",
]
