"""Circular weakly balanced repeated-measurements designs."""

from .design import Design, classify, existence_check, neighbour_matrix
from .optimality import info_matrix, optimality_verdict

__all__ = ["Design", "classify", "existence_check", "neighbour_matrix", "info_matrix", "optimality_verdict"]
__version__ = "0.1.0"
