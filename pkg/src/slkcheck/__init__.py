"""Exact checks for sl_k weight-block combinatorics, Grothendieck-group
operators, degenerate affine Hecke actions, and localized kernel calculus."""

from .rings import (
    InexactDivision,
    LaurentPoly,
    RatFunc,
    VanishingDenominator,
    exact_div,
    one_minus,
    quantum_integer,
    specialize,
)

__all__ = [
    "InexactDivision",
    "LaurentPoly",
    "RatFunc",
    "VanishingDenominator",
    "exact_div",
    "one_minus",
    "quantum_integer",
    "specialize",
]
