"""Minimum [1,2]-sets, [a,b]-sets, and total [a,b]-sets on trees.

Linear-time dynamic programs with exact counting and lazy enumeration of
all minimum sets, an exhaustive oracle for cross-checking on small trees,
and a recursive generator for every tree that carries a total [1,2]-set.
"""

from .cost import INFINITY, ZERO, CostValue, NoSetError, cv_add, cv_min
from .interval import DpTableAB, count_sets_ab, extract_set_ab, gamma_ab, solve_ab
from .onetwo import (
    Bicoloring,
    DpTable12,
    count_sets,
    enumerate_sets,
    extract_set,
    gamma12,
    solve12,
)
from .oracle import (
    MAX_ORACLE_N,
    Mode,
    OracleResult,
    all_valid_sets,
    oracle_solve,
    validate_set,
)
from .total import (
    DpTableTotal,
    count_total_sets,
    extract_total_set,
    gamma_total,
    is_total_tree,
    solve_total,
)
from .tree import (
    CanonicalCode,
    DisconnectedError,
    DuplicateEdgeError,
    EdgeCountError,
    MalformedLineError,
    RootRangeError,
    RootedTree,
    TreeInputError,
    VertexRangeError,
    adjacency,
    canonical_code,
    colored_code,
    format_tree,
    free_trees,
    parse_tree,
    path_tree,
    post_order,
    random_tree,
    spider,
    star_tree,
)
from .upsilon import ColoredTree

__version__ = "0.1.0"

__all__ = [
    "Bicoloring",
    "CanonicalCode",
    "ColoredTree",
    "CostValue",
    "DisconnectedError",
    "DpTable12",
    "DpTableAB",
    "DpTableTotal",
    "DuplicateEdgeError",
    "EdgeCountError",
    "INFINITY",
    "MAX_ORACLE_N",
    "MalformedLineError",
    "Mode",
    "NoSetError",
    "OracleResult",
    "RootRangeError",
    "RootedTree",
    "TreeInputError",
    "VertexRangeError",
    "ZERO",
    "adjacency",
    "all_valid_sets",
    "canonical_code",
    "colored_code",
    "count_sets",
    "count_sets_ab",
    "count_total_sets",
    "cv_add",
    "cv_min",
    "enumerate_sets",
    "extract_set",
    "extract_set_ab",
    "extract_total_set",
    "format_tree",
    "free_trees",
    "gamma12",
    "gamma_ab",
    "gamma_total",
    "is_total_tree",
    "oracle_solve",
    "parse_tree",
    "path_tree",
    "post_order",
    "random_tree",
    "solve12",
    "solve_ab",
    "solve_total",
    "spider",
    "star_tree",
    "validate_set",
]
