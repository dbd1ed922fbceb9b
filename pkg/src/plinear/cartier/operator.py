"""The Cartier operator and its reduction modulo p^r onto a fixed denominator."""

from __future__ import annotations

import logging
from math import comb
from typing import Dict, Union

from plinear.cartier.context import CartierContext, StateRegion
from plinear.exceptions import DegreeEscapeError, SupportEscapeError
from plinear.rings import CoefficientRing, ExpVec, LaurentPoly, Modulus, Residue, TPoly

logger = logging.getLogger(__name__)

ReducedCoefficient = Union[TPoly, Residue]


def cartier_select(h: LaurentPoly, p: int) -> LaurentPoly:
    """C(sum a_k x^k) = sum a_{pk} x^k; coefficients in t are untouched."""
    terms = {}
    for exp, coeff in h.terms.items():
        if all(e % p == 0 for e in exp):
            terms[tuple(e // p for e in exp)] = coeff
    return LaurentPoly(terms, h.nvars, h.ring)


def _check_support(poly: LaurentPoly, region: StateRegion, scale: int, what: str) -> None:
    for exp in poly.support:
        if not region.contains(exp, scale):
            raise SupportEscapeError(
                f"{what}: exponent {exp} lies outside {scale}*mu ({region.kind.value})"
            )


def cartier_reduce(
    ctx: CartierContext, A: LaurentPoly, region: StateRegion
) -> Dict[ExpVec, ReducedCoefficient]:
    """
    Numerator N with C(A / f^rho) = N / f^sigma^rho modulo p^r.

    N is the sum over m < r of p^m * binom(c+m-1, m) * Q_m * f^sigma^(rho-m-c)
    where c = ceil(rho/p) and Q_m = C(A * G^m * f^(p*c - rho)). The sum is
    formed exactly and reduced at the end.

    Args:
        ctx: Cartier context for f, p, r and rho
        A: Numerator; its support must keep every Q_m inside (m+c)*mu
        region: The state region rho*mu whose lattice points index N

    Returns:
        Map from exponent vector to coefficient in (Z/p^r)[t] when f has
        coefficients in Z[t], or in Z/p^r when f has integer coefficients

    Raises:
        SupportEscapeError: If some Q_m or N leaves its region
        DegreeEscapeError: If N exceeds the t-degree bound
    """
    f = ctx.f
    if A.ring is not f.ring:
        A = A.lift()
    p, r, rho, c = ctx.p, ctx.r, ctx.rho, ctx.c

    total = LaurentPoly.zero(f.nvars, f.ring)
    for m in range(r):
        Q_m = cartier_select(A * ctx.numerator_factors[m], p)
        _check_support(Q_m, region, m + c, f"Q_{m}")
        weight = p ** m * comb(c + m - 1, m)
        total = total + Q_m * ctx.sigma_powers[rho - m - c] * weight

    modulus = ctx.modulus
    total = total.reduce_mod(modulus)
    for exp in total.support:
        if exp not in region.points:
            raise SupportEscapeError(
                f"Reduced numerator has exponent {exp} outside the state region"
            )

    if f.ring is CoefficientRing.POLYNOMIAL:
        bound = ctx.t_degree_bound()
        if total.t_degree > bound:
            raise DegreeEscapeError(
                f"Reduced numerator has t-degree {total.t_degree} > {bound}"
            )
        return {exp: coeff.reduce(modulus) for exp, coeff in total.terms.items()}

    ring = Modulus(p, r)
    return {exp: Residue(coeff, ring) for exp, coeff in total.terms.items()}
