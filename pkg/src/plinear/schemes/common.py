"""Input checks shared by the scheme builders."""

from sympy import isprime

from plinear.exceptions import PreconditionError, RingMismatchError
from plinear.geometry import Polytope, membership
from plinear.rings import CoefficientRing, LaurentPoly

MAX_PRIME = 2 ** 63


def require_prime(p: int) -> int:
    """Return p if it is a prime below 2^63."""
    if not isinstance(p, int) or p < 2 or p >= MAX_PRIME or not isprime(p):
        raise PreconditionError(f"p={p} is not a prime below 2^63")
    return p


def require_precision(r: int) -> int:
    if not isinstance(r, int) or r < 1:
        raise PreconditionError(f"r={r} must be a positive integer")
    return r


def require_integer_poly(poly: LaurentPoly, name: str) -> LaurentPoly:
    if poly.ring is not CoefficientRing.INTEGER:
        raise RingMismatchError(f"{name} must have integer coefficients")
    if poly.is_zero():
        raise PreconditionError(f"{name} must be nonzero")
    return poly


def require_origin_inside(polytope: Polytope) -> Polytope:
    """The Newton polytope of g must contain 0 so that supp(1 - t*g) lies in it."""
    if not membership(polytope, (0,) * polytope.nvars, 1, strict=False):
        raise PreconditionError("The Newton polytope of g must contain the origin")
    return polytope
