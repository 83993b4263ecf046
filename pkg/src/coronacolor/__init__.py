"""Equitable total colorings of coronas of cubic graphs with n_H + 4 colours."""

from .catalog import all_cubic, named, random_cubic
from .coloring import TotalColoring
from .edge_coloring import equitable_edge_color, lemma1_target_sequence, vizing_color
from .extension import color_corona_equitable, color_corona_type1
from .graph import (CoronaInstance, ElementId, Graph, SemiGraph, build_corona, build_graph,
                    is_bridgeless, semi_corona)
from .matching import perfect_matching
from .planner import plan, se_bounds_check, st_profile
from .semi_corona import color_semi_corona
from .verify import brute_force_equitable_total, brute_force_total_chromatic, verify

__all__ = [
    "CoronaInstance", "ElementId", "Graph", "SemiGraph", "TotalColoring",
    "all_cubic", "brute_force_equitable_total", "brute_force_total_chromatic",
    "build_corona", "build_graph", "color_corona_equitable", "color_corona_type1",
    "color_semi_corona", "equitable_edge_color", "is_bridgeless", "lemma1_target_sequence",
    "named", "perfect_matching", "plan", "random_cubic", "se_bounds_check", "semi_corona",
    "st_profile", "verify", "vizing_color",
]
