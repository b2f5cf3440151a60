"""Finite left semi-trusses, almost left semi-braces and their Yang-Baxter solutions.

Structures are Cayley tables over the indices ``0..n-1``, stored as tuples of
tuples. Every verifier returns a report with the lexicographically first
counterexample for each failing check.
"""

from .report import Check, VerificationReport
from .semibrace import AlmostLeftSemiBrace, LeftSemiBrace
from .truss import BraceLikeSemiTruss, LeftSemiTruss, SkewLeftTruss
from .ybe import SolutionMap

__version__ = "0.1.0"

__all__ = [
    "AlmostLeftSemiBrace",
    "BraceLikeSemiTruss",
    "Check",
    "LeftSemiBrace",
    "LeftSemiTruss",
    "SkewLeftTruss",
    "SolutionMap",
    "VerificationReport",
]
