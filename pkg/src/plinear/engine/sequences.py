"""Exact generators for the sequence catalogue and small explicit schemes."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List, Optional, Sequence, Tuple

from plinear.config import Settings, get_settings
from plinear.engine.oracles import constant_term_table, series_coefficients
from plinear.exceptions import OracleCapExceededError, PreconditionError
from plinear.models import SequenceName, SequenceSpec
from plinear.rings import LaurentPoly, Modulus, Residue, TPoly, parse_poly
from plinear.schemes import require_prime

logger = logging.getLogger(__name__)

APERY_LAURENT = "(x+y)*(z+1)*(x+y+z)*(y+z+1)*x^-1*y^-1*z^-1"
APERY_DENOMINATOR = "(1-x1-x2)*(1-x3-x4)-x1*x2*x3*x4"


def central_binomials(kmax: int) -> List[int]:
    return [comb(2 * k, k) for k in range(kmax + 1)]


def franel_numbers(ell: int, kmax: int) -> List[int]:
    """sum_m binom(k, m)^ell."""
    return [sum(comb(k, m) ** ell for m in range(k + 1)) for k in range(kmax + 1)]


def multinomial_squares(n: int, kmax: int) -> List[int]:
    """
    Sum of squared multinomial coefficients over k_1 + ... + k_n = k.

    Uses S_n(k) = sum_j binom(k, j)^2 S_{n-1}(j) with S_1 = 1.
    """
    values = [1] * (kmax + 1)
    for _ in range(n - 1):
        values = [
            sum(comb(k, j) ** 2 * values[j] for j in range(k + 1)) for k in range(kmax + 1)
        ]
    return values


def apery_numbers(kmax: int) -> List[int]:
    """A_k from (k+1)^3 A_{k+1} = (34k^3 + 51k^2 + 27k + 5) A_k - k^3 A_{k-1}."""
    values = [1, 5][: kmax + 1]
    for k in range(1, kmax):
        num = (34 * k ** 3 + 51 * k ** 2 + 27 * k + 5) * values[k] - k ** 3 * values[k - 1]
        values.append(num // (k + 1) ** 3)
    return values


def apery_sum(k: int) -> int:
    """A_k = sum_m binom(k, m)^2 binom(k+m, m)^2."""
    return sum(comb(k, m) ** 2 * comb(k + m, m) ** 2 for m in range(k + 1))


def apery_prime(k: int) -> Fraction:
    """
    A'_k = sum_m binom(k, m)^2 binom(k+m, m)^2 * 2 (H_{k+m} - H_{k-m}).

    Each term is the derivative in k of binom(k, m)^2 binom(k+m, m)^2, with
    H_j the j-th harmonic number.
    """
    harmonic = [Fraction(0)]
    for j in range(1, 2 * k + 1):
        harmonic.append(harmonic[-1] + Fraction(1, j))
    return sum(
        (
            comb(k, m) ** 2 * comb(k + m, m) ** 2 * 2 * (harmonic[k + m] - harmonic[k - m])
            for m in range(k + 1)
        ),
        Fraction(0),
    )


def powers_of_two(kmax: int) -> List[int]:
    return [2 ** k for k in range(kmax + 1)]


def catalogue_polynomial(spec: SequenceSpec) -> Optional[Tuple[LaurentPoly, Tuple[str, ...]]]:
    """The Laurent polynomial g with a_k = ct[g^k], where the catalogue has one."""
    name = spec.name
    if name is SequenceName.CENTRAL_BINOMIAL:
        variables = ("x",)
        return parse_poly("x + 2 + 1/x", variables), variables
    if name is SequenceName.APERY:
        variables = ("x", "y", "z")
        return parse_poly(APERY_LAURENT, variables), variables
    if name is SequenceName.FRANEL:
        n = spec.parameter - 1
        variables = ("x",) if n == 1 else tuple(f"x{i + 1}" for i in range(n))
        product = "*".join(f"(1+{v})" for v in variables)
        inverse = "*".join(f"{v}^-1" for v in variables)
        return parse_poly(f"{product}*(1+{inverse})", variables), variables
    if name is SequenceName.MULTINOMIAL_SQUARE:
        n = spec.parameter - 1
        variables = ("x",) if n == 1 else tuple(f"x{i + 1}" for i in range(n))
        forward = "+".join(variables)
        backward = "+".join(f"1/{v}" for v in variables)
        return parse_poly(f"(1+{forward})*(1+{backward})", variables), variables
    if name is SequenceName.CUSTOM_CT:
        variables = tuple(spec.variables)
        return parse_poly(spec.poly, variables), variables
    return None


def sequence_values(
    spec: SequenceSpec, kmax: int, settings: Optional[Settings] = None
) -> List:
    """
    Exact values a_0, ..., a_kmax.

    Integer sequences return ints; apery-prime returns Fractions.

    Raises:
        OracleCapExceededError: If a custom sequence needs more than the oracle cap
    """
    settings = settings or get_settings()
    name = spec.name
    if name is SequenceName.CENTRAL_BINOMIAL:
        return central_binomials(kmax)
    if name is SequenceName.FRANEL:
        return franel_numbers(spec.parameter, kmax)
    if name is SequenceName.MULTINOMIAL_SQUARE:
        return multinomial_squares(spec.parameter, kmax)
    if name is SequenceName.APERY:
        return apery_numbers(kmax)
    if name is SequenceName.APERY_PRIME:
        return [apery_prime(k) for k in range(kmax + 1)]
    if name is SequenceName.POWER_OF_TWO:
        return powers_of_two(kmax)

    variables = tuple(spec.variables)
    numerator = parse_poly(spec.numerator, variables) if spec.numerator else None
    if name is SequenceName.CUSTOM_CT:
        g = parse_poly(spec.poly, variables)
        if kmax > settings.ct_cap(g.nvars):
            raise OracleCapExceededError(f"kmax={kmax} exceeds the constant-term oracle cap")
        q = numerator or LaurentPoly.one(g.nvars)
        origin = (0,) * g.nvars
        table = constant_term_table(g, [origin], kmax, q=q)
        return [row[origin] for row in table]

    P = parse_poly(spec.poly, variables)
    n = P.nvars
    if n * kmax > settings.series_cap:
        raise OracleCapExceededError(f"Diagonal index {kmax} exceeds the series oracle cap")
    coefficients = series_coefficients(P, numerator or LaurentPoly.one(n), (kmax,) * n)
    values = [coefficients[(k,) * n] for k in range(kmax + 1)]
    if any(v.denominator != 1 for v in values):
        raise PreconditionError("The diagonal has non-integral coefficients")
    return [v.numerator for v in values]


@dataclass(frozen=True)
class DigitScheme:
    """A p-linear scheme given directly by its digit matrices M_0..M_{p-1}."""

    p: int
    r: int
    matrices: Tuple[Tuple[Tuple[int, ...], ...], ...]
    init: Tuple[int, ...]
    extraction: Tuple[int, ...]

    @property
    def modulus(self) -> int:
        return self.p ** self.r

    def digit_matrix(self, d: int):
        return self.matrices[d]


def _require_odd_prime(p: int) -> None:
    require_prime(p)
    if p == 2:
        raise PreconditionError("p must be an odd prime")


def power_of_two_scheme(p: int) -> DigitScheme:
    """
    Two-state scheme modulo p^2 for (2^k, k*2^k), p odd.

    M_l = [[2^l, p*alpha*2^l], [l*2^l, p*2^l*(1 + l*alpha)]] with
    alpha = (2^(p-1) - 1)/p mod p.
    """
    _require_odd_prime(p)
    m = p * p
    alpha = ((2 ** (p - 1) - 1) // p) % p
    matrices = []
    for ell in range(p):
        two = 2 ** ell
        matrices.append(
            (
                (two % m, p * alpha * two % m),
                (ell * two % m, p * two * (1 + ell * alpha) % m),
            )
        )
    return DigitScheme(p, 2, tuple(matrices), (1, 0), (1, 0))


def power_of_two_scheme_mod(p: int, r: int) -> DigitScheme:
    """
    r-state scheme modulo p^r for 2^k, p odd.

    State j at k is 2^k z^j with u = 2^(p-1) and z = u^k - 1. Since p divides z,
    states j >= r vanish mod p^r. From 2^(kp+l) = 2^l 2^k (1 + z) and
    u^(kp+l) - 1 = u^l (1 + z)^p - 1 = c_l(z), row j of M_l holds the
    z-coefficients of 2^l (1 + z) c_l(z)^j below z^r.
    """
    _require_odd_prime(p)
    if r < 1:
        raise PreconditionError("r must be positive")
    m = p ** r
    u = pow(2, p - 1, m)
    one_plus_z = TPoly((1, 1), m)
    lifted = (one_plus_z ** p).truncate(r)
    matrices = []
    for ell in range(p):
        c = (TPoly.constant(pow(u, ell, m), m) * lifted - 1).truncate(r)
        lead = TPoly.constant(pow(2, ell, m), m) * one_plus_z
        power = TPoly.constant(1, m)
        rows = []
        for _ in range(r):
            row = (lead * power).truncate(r)
            rows.append(tuple(row.coefficient(i) for i in range(r)))
            power = (power * c).truncate(r)
        matrices.append(tuple(rows))
    unit = (1,) + (0,) * (r - 1)
    return DigitScheme(p, r, tuple(matrices), unit, unit)


def gessel_scheme_matrices(p: int) -> DigitScheme:
    """
    Two-state scheme modulo p^2 for (A_k, k*A_k).

    M_l = [[A_l, p*A'_l], [l*A_l, p*(A_l + l*A'_l)]], the harmonic sums A'_l
    being mapped into Z/p^2.
    """
    _require_odd_prime(p)
    ring = Modulus(p, 2)
    m = ring.value
    A = apery_numbers(p - 1)
    matrices = []
    for ell in range(p):
        a = A[ell] % m
        a_prime = Residue.from_rational(apery_prime(ell), ring).value
        matrices.append(
            (
                (a, p * a_prime % m),
                (ell * a % m, p * (a + ell * a_prime) % m),
            )
        )
    return DigitScheme(p, 2, tuple(matrices), (1, 0), (1, 0))


def digit_product(values: Sequence[int], N: int, p: int, modulus: int) -> int:
    """a_{d_m} * ... * a_{d_0} mod modulus over the base-p digits of N."""
    result = 1 % modulus
    while N:
        N, d = divmod(N, p)
        result = result * values[d] % modulus
    return result
