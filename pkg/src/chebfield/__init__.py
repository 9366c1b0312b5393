"""Exact algebra for 2cos(pi/n): minimal polynomials, the field Q(2cos(pi/n)),
regular-polygon diagonal ratios and the Modd n Galois group."""

from .minpoly import FieldElement, minimal_poly, minimal_poly_dpr, minimal_poly_recursive
from .modd import ModdContext, abelian_type, cycle_structure
from .numthy import delta, factorize
from .polycore import Poly, render

__all__ = [
    "FieldElement",
    "ModdContext",
    "Poly",
    "abelian_type",
    "cycle_structure",
    "delta",
    "factorize",
    "minimal_poly",
    "minimal_poly_dpr",
    "minimal_poly_recursive",
    "render",
]
