"""Closed knight's and giraffe's tours with few turns and crossings."""
from .board import GIRAFFE, KNIGHT, BoardDims, Leaper, UnsupportedDims, is_leaper_move, neighbors
from .crossing_bound import build_config_graph, crossing_bound_report, min_mean_cycle
from .giraffe import build_giraffe, giraffe_state_effect
from .matching import Matching, compose
from .metrics import count_crossings, count_crossings_bruteforce, count_turns, metrics
from .multidim import build_multidim
from .oddsym import build_odd, build_symmetric
from .oracle import find_closed_tour, min_metric_tour
from .tour import Tour
from .tour2d import build, build_wh, cell_at, index_of, plan
from .validator import validate

__all__ = [
    "GIRAFFE", "KNIGHT", "BoardDims", "Leaper", "Matching", "Tour", "UnsupportedDims",
    "build", "build_config_graph", "build_giraffe", "build_multidim", "build_odd", "build_symmetric",
    "build_wh", "cell_at", "compose", "count_crossings", "count_crossings_bruteforce", "count_turns",
    "crossing_bound_report", "find_closed_tour", "giraffe_state_effect", "index_of", "is_leaper_move",
    "metrics", "min_mean_cycle", "min_metric_tour", "neighbors", "plan", "validate",
]
