"""Exact enumeration of unlabeled trees.

A truncated integer power-series core, multiset counting operators, and
fixed-point solvers producing the counting sequences for rooted trees,
free trees, and homeomorphically irreducible trees, backed by an
independent brute-force enumerator for verification.
"""

from .multiset import multisets, pairs
from .series import InexactDivision, NonzeroConstantTerm, PowerSeries
from .trees import (
    TreeFamily,
    hit_series,
    rooted_series,
    series_for,
    stree_series,
    unrooted_series,
)

__version__ = "0.1.0"

__all__ = [
    "PowerSeries",
    "NonzeroConstantTerm",
    "InexactDivision",
    "pairs",
    "multisets",
    "TreeFamily",
    "rooted_series",
    "unrooted_series",
    "stree_series",
    "hit_series",
    "series_for",
]
