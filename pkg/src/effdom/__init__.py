"""Minimum-weight efficient domination on hereditary graph classes."""

from __future__ import annotations

from .core import (
    NoFiniteED,
    NotInClass,
    Solved,
    build_gv,
    driver,
    exact_wed,
    mis_wed,
    plant_instance,
    plant_p4p2_instance,
    preprocess,
    verify_ed,
)
from .graph import INF, Graph, WeightedGraph, build_graph
from .kernels import BACKEND
from .modular import is_prime, lift, maximal_homogeneous_sets, wed_reduce
from .patterns import ClassId, find_induced_linear_forest, in_class_bruteforce
from .solvers import (
    p6_diam_reduce,
    solve_2p3s122,
    solve_exact,
    solve_p4p2,
    solve_p5_base,
    solve_p5kp2,
    solve_p6s122,
)

__all__ = [
    "BACKEND",
    "INF",
    "ClassId",
    "Graph",
    "NoFiniteED",
    "NotInClass",
    "Solved",
    "WeightedGraph",
    "build_graph",
    "build_gv",
    "driver",
    "exact_wed",
    "find_induced_linear_forest",
    "in_class_bruteforce",
    "is_prime",
    "lift",
    "maximal_homogeneous_sets",
    "mis_wed",
    "p6_diam_reduce",
    "plant_instance",
    "plant_p4p2_instance",
    "preprocess",
    "solve_2p3s122",
    "solve_exact",
    "solve_p4p2",
    "solve_p5_base",
    "solve_p5kp2",
    "solve_p6s122",
    "verify_ed",
    "wed_reduce",
]
