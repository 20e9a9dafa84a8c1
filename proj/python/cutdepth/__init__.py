"""Depth of cutting planes with respect to polyhedra."""

from ._core import (
    CutDepthError,
    corner_cut_depth,
    cut_depth,
    cut_depth_standard_form,
    integer_hull_depth_bound,
    integer_hull_depth_bound_sqrt_n,
    intersection_cut_bound,
    lattice_integer_hull_bound,
    max_distance_bruteforce,
    max_distance_greedy,
    point_depth,
    split_depth_bound,
    split_point_depth_bound,
    volume_lower_bound,
)

__all__ = [
    "CutDepthError",
    "corner_cut_depth",
    "cut_depth",
    "cut_depth_standard_form",
    "integer_hull_depth_bound",
    "integer_hull_depth_bound_sqrt_n",
    "intersection_cut_bound",
    "lattice_integer_hull_bound",
    "max_distance_bruteforce",
    "max_distance_greedy",
    "point_depth",
    "split_depth_bound",
    "split_point_depth_bound",
    "volume_lower_bound",
]
