"""Hasse-Witt matrices of Laurent polynomials."""

import logging

from plinear.cartier import CartierContext, StateRegion, cartier_reduce
from plinear.exceptions import PreconditionError
from plinear.geometry import RegionKind, newton_polytope
from plinear.models import HasseWitt
from plinear.rings import CoefficientRing, LaurentPoly, TPoly
from plinear.schemes.common import require_integer_poly, require_origin_inside, require_prime
from plinear.schemes.constant_term import denominator_from

logger = logging.getLogger(__name__)


def build_hasse_witt(g: LaurentPoly, p: int) -> HasseWitt:
    """
    H_uv(t) = coefficient of x^(p*v - u) in (1 - t*g)^(p-1), reduced mod p.

    This is the Cartier reduction with r = rho = 1, so that
    F_u(t) = sum_v H_uv(t) F_v(t^p) mod p for F_u(t) = sum_k ct[x^u g^k] t^k.

    Raises:
        PreconditionError: If p is not prime, 0 is not in Newton(g), or
            Newton(g) has no interior lattice points
    """
    require_prime(p)
    require_integer_poly(g, "g")
    polytope = require_origin_inside(newton_polytope(g.support))
    region = StateRegion.build(RegionKind.INTERIOR, polytope, 1)
    if not len(region):
        raise PreconditionError("The Newton polytope of g has no interior lattice points")

    ctx = CartierContext.create(denominator_from(g), p, 1, 1)
    points = region.points.points
    zero = TPoly((), p)
    rows = []
    for u in points:
        reduced = cartier_reduce(ctx, LaurentPoly.monomial(u, 1, CoefficientRing.POLYNOMIAL), region)
        rows.append(tuple(reduced.get(v, zero) for v in points))
    logger.info("Hasse-Witt matrix at p=%d: %d x %d", p, len(points), len(points))
    return HasseWitt(p=p, g=g, states=points, H=tuple(rows))
