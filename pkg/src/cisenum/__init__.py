"""Enumerate the connected induced subgraphs of size k of an undirected graph
with O(kΔ) delay, plus reference enumerators and a benchmark CLI."""

from ._backend import BACKENDS, DEFAULT_BACKEND, get_kernels
from .baselines import (
    BruteForceCapExceeded,
    CanonicalSolutionSet,
    DuplicateSolutionError,
    brute_force_enumerate,
    simple_enumerate,
)
from .graph import (
    Graph,
    GraphFormatError,
    connected_components,
    count_upper_bound,
    dfs_discovery_order,
    generate_graph,
    induced_is_connected,
    max_degree,
    parse_graph,
    read_graph,
    sample_graph,
)
from .kdelta import (
    DelayBoundError,
    DelayReport,
    EnumerationStats,
    StopEnumeration,
    delay_probe,
    enumerate_k_subgraphs,
    list_k_subgraphs,
)
from .state import EnumerationState, InvariantViolation, checked_enumerate

__all__ = [
    "BACKENDS", "DEFAULT_BACKEND", "get_kernels",
    "BruteForceCapExceeded", "CanonicalSolutionSet", "DuplicateSolutionError",
    "brute_force_enumerate", "simple_enumerate",
    "Graph", "GraphFormatError", "connected_components", "count_upper_bound",
    "dfs_discovery_order", "generate_graph", "induced_is_connected", "max_degree",
    "parse_graph", "read_graph", "sample_graph",
    "DelayBoundError", "DelayReport", "EnumerationStats", "StopEnumeration",
    "delay_probe", "enumerate_k_subgraphs", "list_k_subgraphs",
    "EnumerationState", "InvariantViolation", "checked_enumerate",
]
