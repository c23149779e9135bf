"""Exact-arithmetic intervals below Coxeter elements in euclidean Coxeter groups.

Everything is computed over the rationals in the simple-root coordinate
system, so subspace comparisons, isometry classification and poset order
tests are all exact decisions rather than numerical guesses.
"""

__version__ = "0.1.0"
