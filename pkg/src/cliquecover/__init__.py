"""Edge-disjoint clique covers: bounds, constructions, and exact search.

Cover the edges of a graph on n vertices with exactly n edge-disjoint
cliques, maximizing the total number of clique vertices.  The package
provides the analytic upper bound, a projective-plane construction that
attains it, an independent verifier, a desk-scale exact solver, and the
prime-window machinery that makes the construction dense.
"""

from .bounds import (
    BoundValue,
    mean_inequality_holds,
    ordered_pairs,
    ordered_pairs_inv,
    ordered_pairs_inv_derivative,
    vertex_sum_bound,
)
from .fileio import (
    parse_cover_file,
    parse_graph_file,
    write_cover_file,
    write_graph_file,
)
from .graph import Clique, CliqueCover, Graph, complete_graph, graph_from_edges
from .plane import PlaneParams, hub_clique, plane_cover, plane_params, slope_clique
from .primes import (
    PrimeWindowResult,
    consecutive_plane_ratio,
    is_prime,
    pi_window,
    plane_prime_below,
    prime_window,
    primes_upto,
)
from .report import RatioRow, format_ratio_table, ratio_row, ratio_table
from .solver import SolveResult, max_cover_over_graphs, max_cover_sum
from .verify import VerifyReport, verify, vertex_sum

__version__ = "0.1.0"

__all__ = [
    "BoundValue",
    "Clique",
    "CliqueCover",
    "Graph",
    "PlaneParams",
    "PrimeWindowResult",
    "RatioRow",
    "SolveResult",
    "VerifyReport",
    "complete_graph",
    "consecutive_plane_ratio",
    "format_ratio_table",
    "graph_from_edges",
    "hub_clique",
    "is_prime",
    "max_cover_over_graphs",
    "max_cover_sum",
    "mean_inequality_holds",
    "ordered_pairs",
    "ordered_pairs_inv",
    "ordered_pairs_inv_derivative",
    "parse_cover_file",
    "parse_graph_file",
    "pi_window",
    "plane_cover",
    "plane_params",
    "plane_prime_below",
    "prime_window",
    "primes_upto",
    "ratio_row",
    "ratio_table",
    "slope_clique",
    "vertex_sum",
    "vertex_sum_bound",
    "verify",
    "write_cover_file",
    "write_graph_file",
]
