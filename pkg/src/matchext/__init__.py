"""Exact combinatorial toolkit for matching extendability,
factor-criticality, and independence-number structure on small graphs,
with an exhaustive theorem-verification harness."""

from .families import FAMILIES, FamilyError, FamilySpec, build_family
from .gallai_edmonds import GEDecomposition, GEVerification, decompose, verify_ge
from .graph import (
    Graph,
    GraphError,
    StructureMetrics,
    build_graph,
    complement,
    complete_graph,
    cross_edge_count,
    cycle_graph,
    delete_vertices,
    disjoint_union,
    empty_graph,
    join,
    path_graph,
    structure_metrics,
)
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .harness import (
    CHECKS,
    TheoremVerdict,
    Violation,
    analyze,
    random_connected_graphs,
    run_checks,
    verify_theorem,
)
from .matching import (
    MatchingError,
    extends_to_perfect,
    has_perfect_matching,
    matching_number,
    matchings_of_size,
    maximum_matching,
)
from .properties import (
    PreconditionError,
    PropertyProfile,
    independence_number,
    is_factor_critical,
    is_k_extendable,
    is_k_half_extendable,
    is_k_half_extendable_via_join,
    is_n_factor_critical,
    profile,
    tutte_criterion,
    vertex_connectivity,
)
from .recognizers import (
    CaseLabel,
    CaseResult,
    JoinWitness,
    PartitionWitness,
    classify_4k_case,
    find_bad_partition,
    recognize_exceptional_join,
)

__version__ = "0.1.0"
