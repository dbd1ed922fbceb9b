"""Consistency checks for schemes that did not come straight from a builder."""

from typing import Union

from plinear.exceptions import NotFullDimensionalError, PreconditionError, SchemeFormatError
from plinear.geometry import box_closure_points, dilated_interior_points, newton_polytope
from plinear.models import CTScheme, RatScheme
from plinear.schemes.common import require_prime


def validate_scheme(scheme: Union[CTScheme, RatScheme]) -> None:
    """
    Check the fields of a scheme against its prime and source polynomials.

    The states and the initial vector must be exactly the ones the builder
    derives from g (or P) and rho, and rho must satisfy rho - ceil(rho/p) >= r - 1.

    Raises:
        SchemeFormatError: On the first disagreement
    """
    p, r, rho, n = scheme.p, scheme.r, scheme.rho, scheme.n
    try:
        require_prime(p)
    except PreconditionError as e:
        raise SchemeFormatError(str(e)) from e
    if rho - (-(-rho // p)) < r - 1:
        raise SchemeFormatError(f"rho={rho} is too small for precision p^{r} with p={p}")
    if len(scheme.variables) != n:
        raise SchemeFormatError(f"{len(scheme.variables)} variable names for n={n}")

    source = scheme.g if isinstance(scheme, CTScheme) else scheme.P
    try:
        polytope = newton_polytope(source.support)
        if isinstance(scheme, CTScheme):
            interior = dilated_interior_points(polytope, rho).points
            states = tuple((ell, u) for ell in range(rho) for u in interior)
        else:
            states = box_closure_points(polytope, rho).points
    except (NotFullDimensionalError, PreconditionError) as e:
        raise SchemeFormatError(f"Source polynomial cannot carry a scheme: {e}") from e
    if scheme.states != states:
        raise SchemeFormatError("Stored states do not match the source polynomial")

    origin = (0,) * n
    if isinstance(scheme, CTScheme):
        init = tuple(1 if state == (0, origin) else 0 for state in states)
    else:
        P0 = scheme.P.constant_term()
        if P0 % p == 0:
            raise SchemeFormatError(f"p={p} divides the constant term {P0} of P")
        init = tuple(pow(P0, -rho, scheme.modulus) if u == origin else 0 for u in states)
    if scheme.init != init:
        raise SchemeFormatError("Stored initial vector does not match the source polynomial")
