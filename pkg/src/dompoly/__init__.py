"""Exact domination polynomials of simple graphs."""

from .graph import Graph, Splitting, make_splitting
from .oracle import Condition, StateIndex, brute_force_D
from .polynomial import Polynomial, RationalFunction
from .solver import Solver, Strategy, compute, compute_conditioned

__version__ = "0.1.0"

__all__ = [
    "Condition",
    "Graph",
    "Polynomial",
    "RationalFunction",
    "Solver",
    "Splitting",
    "StateIndex",
    "Strategy",
    "brute_force_D",
    "compute",
    "compute_conditioned",
    "make_splitting",
]
