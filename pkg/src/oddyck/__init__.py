"""Exact enumeration of Dyck paths and prefixes with odd-length descents.

Three independent routes compute the same numbers: a layered automaton
(:mod:`oddyck.automaton`), brute force (:mod:`oddyck.oracle`) and kernel-method
closed forms over truncated Laurent series (:mod:`oddyck.kernel`).
"""
from .automaton import (CountTable, Layer, LayerState, PathClass, count_complete,
                        dp_counts, partial_series, transitions)
from .kernel import (bonus_closed, g0_closed, h0_closed, partial_closed,
                     residue_cubic, residue_functional, solve_v1)
from .oracle import Path, classify, descent_runs, oracle_counts
from .series import Series, decimate

__version__ = "0.1.0"
