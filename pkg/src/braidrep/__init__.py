"""Exact Burau, Gassner and quantum gl(1|1) computations for braid words."""

from .braids import BraidWord, Permutation, parse_braid
from .multiindex import MultiIndex
from .ring import LaurentPoly, RingMatrix, VarSet

__all__ = ["BraidWord", "Permutation", "parse_braid", "MultiIndex", "LaurentPoly", "RingMatrix", "VarSet"]
