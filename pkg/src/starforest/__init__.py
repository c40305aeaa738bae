"""Spanning star forests with provably large components."""

from .bmatch import BipGraph, DeficiencyCertificate, QuotaAssignment, max_uniform_quota, quota_matching
from .factor import StarFactor
from .general import GeneralConfig, star_factor_general
from .generators import (
    complete_bipartite,
    paley_bipartite,
    random_regular,
    smallest_paley_prime,
    spanning_regular_subgraph,
)
from .graph import Graph, dump_edge_list, load_edge_list, min_degree, prune_high_high_edges
from .regular import RegularConfig, pick_centers_regular, star_factor_regular
from .resample import Assignment, EventSystem, ResampleExhausted, resample_until_good
from .verify import (
    DomSetResult,
    ValidationReport,
    min_dominating_set,
    paley_domination_check,
    validate_star_factor,
)

__all__ = [
    "BipGraph",
    "DeficiencyCertificate",
    "QuotaAssignment",
    "max_uniform_quota",
    "quota_matching",
    "StarFactor",
    "GeneralConfig",
    "star_factor_general",
    "complete_bipartite",
    "paley_bipartite",
    "random_regular",
    "smallest_paley_prime",
    "spanning_regular_subgraph",
    "Graph",
    "dump_edge_list",
    "load_edge_list",
    "min_degree",
    "prune_high_high_edges",
    "RegularConfig",
    "pick_centers_regular",
    "star_factor_regular",
    "Assignment",
    "EventSystem",
    "ResampleExhausted",
    "resample_until_good",
    "DomSetResult",
    "ValidationReport",
    "min_dominating_set",
    "paley_domination_check",
    "validate_star_factor",
]

__version__ = "0.1.0"
