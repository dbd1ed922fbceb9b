"""Constant-term schemes: ct[q * g^k] modulo p^r."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Sequence

from plinear.cartier import CartierContext, StateRegion, cartier_reduce, choose_rho
from plinear.config import get_settings
from plinear.exceptions import NumeratorSupportError, SupportEscapeError
from plinear.geometry import RegionKind, membership, newton_polytope
from plinear.models import CTScheme
from plinear.rings import CoefficientRing, ExpVec, LaurentPoly, TPoly, tpoly_digit_slice
from plinear.schemes.common import (
    require_integer_poly,
    require_origin_inside,
    require_precision,
    require_prime,
)

logger = logging.getLogger(__name__)


def denominator_from(g: LaurentPoly) -> LaurentPoly:
    """f = 1 - t*g over Z[t]."""
    one = LaurentPoly.one(g.nvars, CoefficientRing.POLYNOMIAL)
    return one - g.lift() * TPoly.monomial(1)


def default_variables(n: int) -> tuple:
    return ("x",) if n == 1 else tuple(f"x{i + 1}" for i in range(n))


def build_ct_scheme(
    g: LaurentPoly,
    p: int,
    r: int,
    q: Optional[LaurentPoly] = None,
    variables: Optional[Sequence[str]] = None,
    threads: Optional[int] = None,
) -> CTScheme:
    """
    Build the scheme for a_k = ct[q * g^k] modulo p^r.

    With f = 1 - t*g and rho = choose_rho(p, r), every state u of rho*Newton(g)
    contributes one Cartier reduction C(x^u / f^rho) = sum_v q_{u,v}(t) x^v / f^sigma^rho.
    Slicing t^l q_{u,v} into base-p blocks gives the entries of M(t).

    Args:
        g: Laurent polynomial with integer coefficients and full-dimensional Newton polytope
        p: Prime
        r: Precision exponent
        q: Numerator supported in the interior of Newton(g); defaults to 1
        variables: Variable names recorded with the scheme
        threads: Worker threads for the per-state reductions

    Raises:
        NotFullDimensionalError: If Newton(g) has empty interior
        NumeratorSupportError: If q is not supported in the interior of Newton(g)
        PreconditionError: If p is not prime, r < 1, or 0 is not in Newton(g)
    """
    require_prime(p)
    require_precision(r)
    require_integer_poly(g, "g")
    n = g.nvars
    q = LaurentPoly.one(n) if q is None else require_integer_poly(q, "q")
    variables = tuple(variables) if variables else default_variables(n)
    threads = threads or get_settings().threads

    polytope = require_origin_inside(newton_polytope(g.support))
    for w in q.support:
        if not membership(polytope, w, 1, strict=True):
            raise NumeratorSupportError(
                f"Numerator exponent {w} is not interior to the Newton polytope of g"
            )

    rho = choose_rho(p, r)
    ctx = CartierContext.create(denominator_from(g), p, r, rho)
    region = StateRegion.build(RegionKind.INTERIOR, polytope, rho)
    points = region.points.points
    logger.info(
        "Building constant-term scheme: p=%d r=%d rho=%d, %d interior points, %d states",
        p, r, rho, len(points), rho * len(points),
    )

    def reduce_state(u: ExpVec) -> Dict[ExpVec, TPoly]:
        reduced = cartier_reduce(ctx, LaurentPoly.monomial(u, 1, CoefficientRing.POLYNOMIAL), region)
        logger.debug("Reduced state %s: %d nonzero entries", u, len(reduced))
        return reduced

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(reduce_state, points))
    else:
        rows = [reduce_state(u) for u in points]

    modulus = ctx.modulus
    states = [(ell, u) for ell in range(rho) for u in points]
    index = {state: i for i, state in enumerate(states)}
    zero = TPoly((), modulus)
    matrix: List[List[TPoly]] = [[zero] * len(states) for _ in states]
    for ell in range(rho):
        for u, reduced in zip(points, rows):
            row = matrix[index[(ell, u)]]
            for v, q_uv in reduced.items():
                for m, block in enumerate(tpoly_digit_slice(q_uv, p, ell, rho)):
                    if block:
                        row[index[(m, v)]] = block

    init = [1 if state == (0, (0,) * n) else 0 for state in states]
    extraction = _extraction_vector(q.lift() * ctx.f_power(rho - 1), rho, index)

    return CTScheme(
        p=p,
        r=r,
        rho=rho,
        n=n,
        states=tuple(states),
        matrix=tuple(tuple(row) for row in matrix),
        init=tuple(init),
        extraction=extraction,
        g=g,
        q=q,
        variables=variables,
    )


def _extraction_vector(h: LaurentPoly, rho: int, index: Dict) -> tuple:
    """
    Integer functional recovering ct[q g^k] from the state vector.

    With q * f^(rho-1) = sum_w sum_j c_{j,w} t^j x^w, the entry at state (j, w) is c_{j,w}.
    """
    extraction = [0] * len(index)
    for w, coeff in h.terms.items():
        for j, c in enumerate(coeff.coeffs):
            if not c:
                continue
            state = (j, w)
            if j >= rho or state not in index:
                raise SupportEscapeError(f"Extraction term t^{j} x^{w} has no matching state")
            extraction[index[state]] = c
    return tuple(extraction)
