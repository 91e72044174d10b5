"""Bernstein exponents of plane curve germs with two Puiseux pairs.

Exact invariants (spectrum, Yano sets, common roots, bounds), resolution
certificates and a symbolic residue engine for deformation families.
"""

from .exact import NumericalSemigroup, sg_new, sg_contains, sg_frobenius, sg_gaps, sg_decompose
from .invariants import CharSeq, InvariantReport, invariant_report

__all__ = [
    "NumericalSemigroup", "sg_new", "sg_contains", "sg_frobenius", "sg_gaps",
    "sg_decompose", "CharSeq", "InvariantReport", "invariant_report",
]

__version__ = "0.1.0"
