"""Interval total colorings: constructions, verification, bounds and an
exhaustive search oracle for small graphs."""

from .bounds import BoundReport, bound_report, known_chi_double_prime, known_exact_values
from .coloring import (
    TotalColoring,
    VerifyOutcome,
    check_continuity,
    invert,
    palette,
    verify_interval_total,
    verify_total_proper,
)
from .constructions import (
    color_complete_bipartite,
    color_complete_even_min,
    color_complete_max,
    color_complete_spectrum,
    color_cycle_max,
    color_cycle_min,
    color_regular_bipartite,
    color_tree,
    color_wheel,
    construct,
    proper_edge_color_regular_bipartite,
)
from .graph import FamilySpec, Graph, degree, diameter, generate, max_shortest_path_degree_sum, structure_flags
from .search import SearchConfig, compute_spectrum, exists_coloring
from .transform import build_auxiliary, lift_coloring, verify_interval_edge

__version__ = "0.1.0"
