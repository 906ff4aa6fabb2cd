"""Integrated (proportional) k-colorings by local search, with exact verifiers and brute-force oracles."""

from .cut import (
    Partition,
    cut_size,
    k_max_cut,
    mixed_edge_floor,
    mixed_edge_lower_bound,
    partition_from_coloring,
)
from .graph import (
    DimacsWarning,
    Graph,
    GraphFormatError,
    gen_gnp,
    gen_named,
    load_dimacs,
    load_edge_list,
    max_degree,
    serialize_dimacs,
    serialize_edge_list,
)
from .metrics import (
    Coloring,
    VerifyReport,
    Violation,
    WeightVector,
    color_degree,
    is_k_secure,
    mixing_number,
    monochrome_edge_counts,
    same_color_degree,
    sigma,
    verify_defective,
    verify_integrated,
    verify_proper,
    verify_proportional,
    verify_unfriendly_partition,
)
from .oracle import (
    EnumerationLimitExceeded,
    OracleLimit,
    exact_max_cut,
    exhaustive_integrated_search,
    min_sigma,
    sigma_minimizers,
)
from .solver import (
    PreconditionError,
    SolveConfig,
    SolverError,
    SolveTrace,
    defective_coloring,
    greedy_bound_proper_coloring,
    integrated_coloring,
    proportional_coloring,
)

__version__ = "0.1.0"
