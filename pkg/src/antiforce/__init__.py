"""Anti-forcing numbers, nice perfect matchings and extremal graph tools."""

__version__ = "0.1.0"

from .antiforcing import AfResult, BoundsReport, bounds, max_antiforcing, min_antiforcing, omega_antiforcing_set
from .errors import FormatError, InvalidInput, NoPerfectMatching, NotNice
from .generators import FamilySpec, generate
from .graph import Graph, parse_graph, read_graph, write_graph
from .matchings import AlternatingCycle, PerfectMatching, enumerate_perfect_matchings, find_alternating_cycle
from .nice import Involution, NiceSet, edge_involutions, enumerate_nice, equivalence_classes, is_nice
from .products import cartesian_product, prime_by_theta, theta_partition

__all__ = [
    "AfResult",
    "AlternatingCycle",
    "BoundsReport",
    "FamilySpec",
    "FormatError",
    "Graph",
    "InvalidInput",
    "Involution",
    "NiceSet",
    "NoPerfectMatching",
    "NotNice",
    "PerfectMatching",
    "bounds",
    "cartesian_product",
    "edge_involutions",
    "enumerate_nice",
    "enumerate_perfect_matchings",
    "equivalence_classes",
    "find_alternating_cycle",
    "generate",
    "is_nice",
    "max_antiforcing",
    "min_antiforcing",
    "omega_antiforcing_set",
    "parse_graph",
    "prime_by_theta",
    "read_graph",
    "theta_partition",
    "write_graph",
]
