"""Exact arithmetic: residues, t-polynomials and Laurent polynomials."""

from plinear.rings.expressions import format_poly, parse_poly
from plinear.rings.laurent import CoefficientRing, ExpVec, LaurentPoly
from plinear.rings.residue import Modulus, Residue
from plinear.rings.tpoly import TPoly, tpoly_digit_slice, tpoly_from_digits

__all__ = [
    "CoefficientRing",
    "ExpVec",
    "LaurentPoly",
    "Modulus",
    "Residue",
    "TPoly",
    "format_poly",
    "parse_poly",
    "tpoly_digit_slice",
    "tpoly_from_digits",
]
