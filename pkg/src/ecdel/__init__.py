"""Edge-deletion problems on edge-colored graphs: exact solvers, structural
recognizers, and self-validating gadget generators."""

from .graph import (
    ColoredGraph,
    StructuralStats,
    load_graph,
    parse_graph,
    save_graph,
    serialize_graph,
    structural_stats,
)
from .patterns import (
    Occurrence,
    PatternSpec,
    conflict_edges,
    enumerate_occurrences,
    find_one,
    is_free,
)
from .classify import (
    CascadeStatus,
    ClassPartition,
    TDecomposition,
    cascade_status,
    colored_classes,
    is_color_diverse,
    recognize_t,
    spec_is_color_diverse,
)
from .solve import (
    SolveRequest,
    SolveResult,
    branch_solve,
    brute_force,
    cnd_solve,
    restrict_solution,
    run_solve,
    solve_2p4d_on_t,
)

__all__ = [
    "ColoredGraph",
    "StructuralStats",
    "load_graph",
    "parse_graph",
    "save_graph",
    "serialize_graph",
    "structural_stats",
    "Occurrence",
    "PatternSpec",
    "conflict_edges",
    "enumerate_occurrences",
    "find_one",
    "is_free",
    "CascadeStatus",
    "ClassPartition",
    "TDecomposition",
    "cascade_status",
    "colored_classes",
    "is_color_diverse",
    "recognize_t",
    "spec_is_color_diverse",
    "SolveRequest",
    "SolveResult",
    "branch_solve",
    "brute_force",
    "cnd_solve",
    "restrict_solution",
    "run_solve",
    "solve_2p4d_on_t",
]

__version__ = "0.1.0"
