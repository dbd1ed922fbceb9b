"""Schemes for the power series coefficients of Q(x)/P(x) modulo p^r."""

from __future__ import annotations

import logging
from typing import Optional, Sequence, Tuple

from plinear.cartier import CartierContext, StateRegion, cartier_reduce, choose_rho
from plinear.exceptions import (
    BadConstantTermError,
    IndexArityError,
    NumeratorSupportError,
    PreconditionError,
    SchemeFormatError,
    SupportEscapeError,
)
from plinear.geometry import RegionKind, newton_polytope
from plinear.models import RatScheme
from plinear.models.scheme import IntMatrix
from plinear.rings import ExpVec, LaurentPoly
from plinear.schemes.common import require_integer_poly, require_precision, require_prime
from plinear.schemes.constant_term import default_variables

logger = logging.getLogger(__name__)


def _require_polynomial(poly: LaurentPoly, name: str) -> None:
    if any(e < 0 for exp in poly.support for e in exp):
        raise PreconditionError(f"{name} must be a polynomial (no negative exponents)")


def build_rat_scheme(
    P: LaurentPoly,
    p: int,
    r: int,
    Q: Optional[LaurentPoly] = None,
    variables: Optional[Sequence[str]] = None,
) -> RatScheme:
    """
    Build the scheme for the coefficients a_K of Q/P modulo p^r.

    The states are the lattice points u of rho*B(interior of Newton(P)); state u
    at index K tracks the coefficient of x^K in x^u / P^rho. Digit matrices are
    left to rat_digit_matrix.

    Raises:
        BadConstantTermError: If p divides P(0)
        NumeratorSupportError: If Q is not supported in B(interior of Newton(P))
        NotFullDimensionalError: If Newton(P) has empty interior
    """
    require_prime(p)
    require_precision(r)
    require_integer_poly(P, "P")
    _require_polynomial(P, "P")
    n = P.nvars
    Q = LaurentPoly.one(n) if Q is None else require_integer_poly(Q, "Q")
    _require_polynomial(Q, "Q")
    variables = tuple(variables) if variables else default_variables(n)

    P0 = P.constant_term()
    if P0 % p == 0:
        raise BadConstantTermError(f"p={p} divides the constant term {P0} of P")

    polytope = newton_polytope(P.support)
    for w in Q.support:
        if not polytope.in_box_closure(w, 1):
            raise NumeratorSupportError(
                f"Numerator exponent {w} is outside the box closure of the interior of Newton(P)"
            )

    rho = choose_rho(p, r)
    region = StateRegion.build(RegionKind.BOX_CLOSURE, polytope, rho)
    states = region.points.points
    modulus = p ** r
    logger.info("Building rational scheme: p=%d r=%d rho=%d, %d states", p, r, rho, len(states))

    origin = (0,) * n
    init = tuple(pow(P0, -rho, modulus) if u == origin else 0 for u in states)
    index = {u: i for i, u in enumerate(states)}
    extraction = [0] * len(states)
    for w, c in (Q * P.pow(rho - 1)).terms.items():
        if w not in index:
            raise SupportEscapeError(f"Extraction term x^{w} has no matching state")
        extraction[index[w]] = c

    scheme = RatScheme(
        p=p,
        r=r,
        rho=rho,
        n=n,
        states=states,
        init=init,
        extraction=tuple(extraction),
        P=P,
        Q=Q,
        variables=variables,
    )
    scheme.runtime["cartier"] = (CartierContext.create(P, p, r, rho), region)
    return scheme


def _cartier_data(s: RatScheme) -> Tuple[CartierContext, StateRegion]:
    with s.lock:
        data = s.runtime.get("cartier")
        if data is None:
            region = StateRegion.build(RegionKind.BOX_CLOSURE, newton_polytope(s.P.support), s.rho)
            if region.points.points != s.states:
                raise SchemeFormatError("Stored states do not match the box closure of Newton(P)")
            data = (CartierContext.create(s.P, s.p, s.r, s.rho), region)
            s.runtime["cartier"] = data
        return data


def check_digit(s: RatScheme, ell: Sequence[int]) -> ExpVec:
    ell = tuple(int(x) for x in ell)
    if len(ell) != s.n:
        raise IndexArityError(f"Digit vector {ell} does not have {s.n} components")
    if any(not 0 <= x < s.p for x in ell):
        raise ValueError(f"Digit vector {ell} has components outside [0, {s.p})")
    return ell


def rat_digit_matrix(s: RatScheme, ell: Sequence[int]) -> IntMatrix:
    """
    The matrix Lambda_l with a_{u, pk+l} = sum_v Lambda_l[u][v] a_{v, k} mod p^r.

    Row u holds the coefficients of C(x^(u-l) / P^rho) = sum_v lambda_{u,v,l} x^v / P^rho.
    Results are memoized on the scheme; concurrent callers may both compute a
    missing entry, and the first one stored wins.
    """
    ell = check_digit(s, ell)
    cached = s.digit_matrices.get(ell)
    if cached is not None:
        return cached

    ctx, region = _cartier_data(s)
    rows = []
    for u in s.states:
        shift = tuple(a - b for a, b in zip(u, ell))
        reduced = cartier_reduce(ctx, LaurentPoly.monomial(shift), region)
        rows.append(tuple(reduced[v].value if v in reduced else 0 for v in s.states))
    matrix = tuple(rows)
    logger.debug("Digit matrix %s computed (%d states)", ell, len(rows))

    with s.lock:
        return s.digit_matrices.setdefault(ell, matrix)
