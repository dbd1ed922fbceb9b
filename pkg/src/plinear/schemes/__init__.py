"""Scheme builders."""

from plinear.schemes.common import require_prime
from plinear.schemes.constant_term import build_ct_scheme, denominator_from
from plinear.schemes.hasse_witt import build_hasse_witt
from plinear.schemes.rational import build_rat_scheme, rat_digit_matrix
from plinear.schemes.validation import validate_scheme

__all__ = [
    "build_ct_scheme",
    "build_hasse_witt",
    "build_rat_scheme",
    "denominator_from",
    "rat_digit_matrix",
    "require_prime",
    "validate_scheme",
]
