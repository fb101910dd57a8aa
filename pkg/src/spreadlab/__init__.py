"""spreadlab: spectral spread bounds on graphs, line graphs, and total graphs.

The package computes adjacency / Laplacian / signless-Laplacian spectra of
small graphs and their line and total graphs, evaluates a collection of
spread bounds with explicit hypothesis gating and tightness tracking, and
ships an exhaustive sweep harness that verifies every bound on every labeled
graph in a size range.
"""

from ._kernels import BACKEND, eigvalsh_descending
from .bounds import (
    SLACK_TOL,
    BoundReport,
    GraphFacts,
    connectivity_spread_bound,
    edge_addition_monotonicity,
    gregory_upper,
    grone_tree_bound,
    join_family_line_spectrum,
    join_family_line_spread,
    line_spread_trichotomy,
    line_spread_upper,
    regular_total_min_eig,
    regular_total_spectrum,
    regular_total_spread,
    spread_vs_line_spread,
    total_laplacian_spread_lower,
    total_q_spread_lower,
    total_spread_lower,
    unicyclic_spread_bound,
)
from .graph import (
    CapacityError,
    ConnectivityProfile,
    DegreeProfile,
    Graph,
    ParseError,
    connectivity_profile,
    cycle_pendant_tree_diameter,
    degree_profile,
    disjoint_union,
    edge_connectivity,
    family,
    from_graph6,
    join,
    max_induced_tree_diameter,
    parse_edge_list,
    to_graph6,
    vertex_connectivity,
)
from .harness import (
    ALL_CHECK_IDS,
    BOUND_CHECK_IDS,
    IDENTITY_CHECK_IDS,
    SweepConfig,
    VerificationLedger,
    enumerate_graphs,
    enumerate_regular_graphs,
    oracle_crosscheck,
    run_sweep,
)
from .quotient import (
    QuotientMatrix,
    edge_interlacing_check,
    interlacing_check,
    quotient_eigenvalues,
    quotient_matrix,
    total_vertex_edge_blocks,
)
from .spectra import (
    MAX_EIG_ORDER,
    ShiftCheck,
    SpectralSummary,
    adjacency_matrix,
    laplacian_matrix,
    signless_laplacian_matrix,
    signless_line_shift_check,
    spectral_summary,
    sym_eigenvalues,
)
from .transforms import EdgeIndex, incidence_matrix, line_graph, total_graph

__version__ = "0.1.0"

__all__ = [
    "ALL_CHECK_IDS",
    "BACKEND",
    "BOUND_CHECK_IDS",
    "BoundReport",
    "CapacityError",
    "ConnectivityProfile",
    "DegreeProfile",
    "EdgeIndex",
    "Graph",
    "GraphFacts",
    "IDENTITY_CHECK_IDS",
    "MAX_EIG_ORDER",
    "ParseError",
    "QuotientMatrix",
    "SLACK_TOL",
    "ShiftCheck",
    "SpectralSummary",
    "SweepConfig",
    "VerificationLedger",
    "adjacency_matrix",
    "connectivity_profile",
    "connectivity_spread_bound",
    "cycle_pendant_tree_diameter",
    "degree_profile",
    "disjoint_union",
    "edge_addition_monotonicity",
    "edge_connectivity",
    "edge_interlacing_check",
    "eigvalsh_descending",
    "enumerate_graphs",
    "enumerate_regular_graphs",
    "family",
    "from_graph6",
    "gregory_upper",
    "grone_tree_bound",
    "incidence_matrix",
    "interlacing_check",
    "join",
    "join_family_line_spectrum",
    "join_family_line_spread",
    "laplacian_matrix",
    "line_graph",
    "line_spread_trichotomy",
    "line_spread_upper",
    "max_induced_tree_diameter",
    "oracle_crosscheck",
    "parse_edge_list",
    "quotient_eigenvalues",
    "quotient_matrix",
    "regular_total_min_eig",
    "regular_total_spectrum",
    "regular_total_spread",
    "run_sweep",
    "signless_laplacian_matrix",
    "signless_line_shift_check",
    "spectral_summary",
    "spread_vs_line_spread",
    "sym_eigenvalues",
    "to_graph6",
    "total_graph",
    "total_laplacian_spread_lower",
    "total_q_spread_lower",
    "total_spread_lower",
    "total_vertex_edge_blocks",
    "unicyclic_spread_bound",
    "vertex_connectivity",
]
