"""Verification suites comparing schemes and congruences against exact oracles."""

from __future__ import annotations

import itertools
import logging
from math import comb
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from plinear.cartier import CartierContext, StateRegion, cartier_reduce, cartier_select
from plinear.config import Settings, get_settings
from plinear.engine.evaluator import eval_ct, eval_digit_scheme, eval_rat
from plinear.engine.oracles import (
    constant_term_table,
    ct_state_vectors,
    rat_state_vector,
    series_coefficients,
    series_inverse,
)
from plinear.engine.reports import VerificationReport
from plinear.engine.sequences import (
    apery_numbers,
    apery_prime,
    digit_product,
    gessel_scheme_matrices,
    power_of_two_scheme,
    power_of_two_scheme_mod,
    sequence_values,
)
from plinear.exceptions import OracleCapExceededError, PreconditionError
from plinear.models import CTScheme, RatScheme, SequenceName, SequenceSpec
from plinear.rings import CoefficientRing, LaurentPoly, Modulus, Residue
from plinear.schemes import build_hasse_witt, rat_digit_matrix, require_prime

logger = logging.getLogger(__name__)


def _mat_vec(matrix, vector, modulus: int) -> list:
    product = np.array(matrix, dtype=object).dot(np.array(vector, dtype=object))
    return [int(x) % modulus for x in product]


def _finish(report: VerificationReport) -> VerificationReport:
    if report.passed:
        logger.info("%s passed %d checks", report.name, report.checked)
    else:
        logger.warning(
            "%s failed %d of %d checks", report.name, report.failure_count, report.checked
        )
    return report


def verify_scheme(
    s: Union[CTScheme, RatScheme],
    kmax: int,
    indices: Optional[Iterable[Sequence[int]]] = None,
    settings: Optional[Settings] = None,
) -> VerificationReport:
    """
    Check a_{kp+l} = M_l a_k mod p^r on exact state vectors for every k <= kmax
    and every digit l < p, and the evaluator against the target sequence for
    every index N <= kmax*p + p - 1 those checks reach.

    Rational schemes check every multi-index in [0, kmax]^n unless ``indices``
    lists the ones to check.

    Raises:
        OracleCapExceededError: If kmax*p + p - 1 exceeds the constant-term
            oracle cap, or the index box exceeds the series oracle cap
    """
    settings = settings or get_settings()
    if isinstance(s, CTScheme):
        return _verify_ct(s, kmax, settings)
    return _verify_rat(s, kmax, indices, settings)


def _verify_ct(s: CTScheme, kmax: int, settings: Settings) -> VerificationReport:
    m, p = s.modulus, s.p
    top = kmax * p + p - 1
    cap = settings.ct_cap(s.n)
    if top > cap:
        raise OracleCapExceededError(
            f"kmax={kmax} needs constant terms up to {top}, beyond the oracle cap {cap}"
        )
    report = VerificationReport(f"scheme ct p={p} r={s.r}")
    vectors = ct_state_vectors(s, top, modulus=m)
    targets = constant_term_table(s.g, [(0,) * s.n], top, q=s.q, modulus=m)

    for k in range(kmax + 1):
        for ell in range(p):
            N = k * p + ell
            rhs = _mat_vec(s.digit_matrix(ell), vectors[k], m)
            report.record(vectors[N] == rhs, k, ell, vectors[N], rhs)
    for N in range(top + 1):
        expected = targets[N][(0,) * s.n] % m
        got = eval_ct(s, N).value
        report.record(got == expected, N, "eval", got, expected)
    return _finish(report)


def _verify_rat(
    s: RatScheme,
    kmax: int,
    indices: Optional[Iterable[Sequence[int]]],
    settings: Settings,
) -> VerificationReport:
    if indices is None:
        indices = list(itertools.product(range(kmax + 1), repeat=s.n))
    else:
        indices = [tuple(int(x) for x in K) for K in indices]
    if not indices:
        return VerificationReport(f"scheme rat p={s.p} r={s.r}")
    hi = tuple(max(K[i] for K in indices) for i in range(s.n))
    if sum(hi) > settings.series_cap:
        raise OracleCapExceededError(f"Index box {hi} exceeds the series oracle cap")

    m, p = s.modulus, s.p
    report = VerificationReport(f"scheme rat p={p} r={s.r}")
    inverse = series_inverse(s.P.pow(s.rho), hi, modulus=m)
    targets = series_coefficients(s.P, s.Q, hi, modulus=m)

    for N in indices:
        k = tuple(x // p for x in N)
        ell = tuple(x % p for x in N)
        lhs = [int(x) % m for x in rat_state_vector(s, N, inverse)]
        rhs = _mat_vec(rat_digit_matrix(s, ell), rat_state_vector(s, k, inverse), m)
        report.record(lhs == rhs, list(k), list(ell), lhs, rhs)
    for N in indices:
        got = eval_rat(s, N).value
        report.record(got == targets[N], list(N), "eval", got, targets[N])
    return _finish(report)


def lucas_check(
    seq: SequenceSpec, p: int, kmax: int, settings: Optional[Settings] = None
) -> VerificationReport:
    """a_{k_m p^m + ... + k_0} = a_{k_m} ... a_{k_0} mod p for every index up to kmax."""
    require_prime(p)
    if seq.name is SequenceName.APERY_PRIME:
        raise PreconditionError("apery-prime is not an integer sequence")
    values = sequence_values(seq, kmax, settings)
    report = VerificationReport(f"lucas {seq.label} p={p}")
    for N in range(kmax + 1):
        lhs = values[N] % p
        rhs = digit_product(values, N, p, p)
        report.record(lhs == rhs, N // p, N % p, lhs, rhs)
    return _finish(report)


def gessel_check(p: int, kmax: int) -> VerificationReport:
    """
    A_{kp+l} = A_l A_k + p A'_l k A_k mod p^2 for k <= kmax and l < p.

    Also checks the two-state scheme on (A_k, k A_k) derived from it.
    """
    require_prime(p)
    if p == 2:
        raise PreconditionError("Gessel's congruence is checked for odd primes only")
    m = p * p
    ring = Modulus(p, 2)
    A = apery_numbers(kmax * p + p - 1)
    A_prime = [Residue.from_rational(apery_prime(ell), ring) for ell in range(p)]
    scheme = gessel_scheme_matrices(p)
    report = VerificationReport(f"gessel p={p}")

    for k in range(kmax + 1):
        state = [A[k] % m, k * A[k] % m]
        for ell in range(p):
            N = k * p + ell
            lhs = A[N] % m
            rhs = (A[ell] * A[k] + p * A_prime[ell].value * k * A[k]) % m
            report.record(lhs == rhs, k, ell, lhs, rhs)
            expected = [lhs, N * A[N] % m]
            got = _mat_vec(scheme.digit_matrix(ell), state, m)
            report.record(got == expected, k, ell, got, expected)
    return _finish(report)


def two_state_power_check(p: int, kmax: int = 500) -> VerificationReport:
    """
    Both congruences of the two-state scheme for a_k = 2^k, b_k = k 2^k mod p^2,
    plus evaluation of 2^N through the scheme's digits.
    """
    scheme = power_of_two_scheme(p)
    m = scheme.modulus
    report = VerificationReport(f"power-of-two p={p}")
    for k in range(kmax + 1):
        state = [pow(2, k, m), k * pow(2, k, m) % m]
        for ell in range(p):
            N = k * p + ell
            expected = [pow(2, N, m), N * pow(2, N, m) % m]
            got = _mat_vec(scheme.digit_matrix(ell), state, m)
            report.record(got == expected, k, ell, got, expected)
    for N in range(kmax + 1):
        got = eval_digit_scheme(scheme, N).value
        expected = pow(2, N, m)
        report.record(got == expected, N, "eval", got, expected)
    return _finish(report)


def power_of_two_check(p: int, r: int, kmax: int = 500) -> VerificationReport:
    """
    The r-state scheme for 2^k mod p^r: every digit recursion on the states
    2^k (u^k - 1)^j with u = 2^(p-1), plus evaluation of 2^N.
    """
    scheme = power_of_two_scheme_mod(p, r)
    m = scheme.modulus
    u = pow(2, p - 1, m)

    def states(k: int) -> list:
        z = (pow(u, k, m) - 1) % m
        two = pow(2, k, m)
        return [two * pow(z, j, m) % m for j in range(r)]

    report = VerificationReport(f"power-of-two p={p} r={r}")
    for k in range(kmax + 1):
        state = states(k)
        for ell in range(p):
            expected = states(k * p + ell)
            got = _mat_vec(scheme.digit_matrix(ell), state, m)
            report.record(got == expected, k, ell, got, expected)
    for N in range(kmax + 1):
        got = eval_digit_scheme(scheme, N).value
        expected = pow(2, N, m)
        report.record(got == expected, N, "eval", got, expected)
    return _finish(report)


def multilinear_lucas_check(
    P: LaurentPoly, p: int, kmax: int, settings: Optional[Settings] = None
) -> VerificationReport:
    """
    a_{pk+l} = a_l a_k mod p over the box [0, kmax]^n, for the coefficients a of 1/P.

    Holds for every prime p when P(0) = 1 and P has degree at most 1 in each
    variable; the diagonal of 1/P then has the Lucas property.

    Raises:
        PreconditionError: If P is not such a polynomial
        OracleCapExceededError: If the box exceeds the series oracle cap
    """
    settings = settings or get_settings()
    require_prime(p)
    if any(e not in (0, 1) for w in P.support for e in w):
        raise PreconditionError("P must have degree at most 1 in each variable")
    if P.constant_term() != 1:
        raise PreconditionError("P must have constant term 1")
    n = P.nvars
    if n * kmax > settings.series_cap:
        raise OracleCapExceededError(f"Index box {kmax} exceeds the series oracle cap")

    a = series_coefficients(P, LaurentPoly.one(n), (kmax,) * n, modulus=p)
    report = VerificationReport(f"multilinear lucas p={p}")
    for N in itertools.product(range(kmax + 1), repeat=n):
        k = tuple(x // p for x in N)
        ell = tuple(x % p for x in N)
        rhs = a[ell] * a[k] % p
        report.record(a[N] == rhs, list(k), list(ell), a[N], rhs)
    return _finish(report)


def verify_hasse_witt(
    g: LaurentPoly, p: int, K: int, settings: Optional[Settings] = None
) -> VerificationReport:
    """
    F_u(t) = sum_v H_uv(t) F_v(t^p) mod p up to t^K, with
    F_u(t) = sum_k ct[x^u g^k] t^k from the constant-term oracle.
    """
    settings = settings or get_settings()
    cap = settings.ct_cap(g.nvars)
    if K > cap:
        raise OracleCapExceededError(f"K={K} exceeds the constant-term oracle cap {cap}")
    hw = build_hasse_witt(g, p)
    table = constant_term_table(g, hw.states, K, modulus=p)
    report = VerificationReport(f"hasse-witt p={p}")

    for i, u in enumerate(hw.states):
        for j in range(K + 1):
            lhs = table[j][u] % p
            rhs = 0
            for v, entry in zip(hw.states, hw.H[i]):
                for deg, c in enumerate(entry.coeffs):
                    if deg <= j and (j - deg) % p == 0:
                        rhs += c * table[(j - deg) // p][v]
            rhs %= p
            report.record(lhs == rhs, j, list(u), lhs, rhs)
    return _finish(report)


def verify_cartier_identity(
    ctx: CartierContext,
    A: LaurentPoly,
    region: StateRegion,
    order: int = 30,
) -> VerificationReport:
    """
    Compare cartier_reduce with the Cartier operator applied to series expansions.

    Over Z[t] (f = 1 mod t) both A/f^rho and N/f^sigma^rho are expanded in t
    to t-order ``order``. Over Z (p does not divide f(0)) they are expanded in
    x over the index box [0, order]^n for the selected side.
    """
    reduced = cartier_reduce(ctx, A, region)
    if ctx.f.ring is CoefficientRing.POLYNOMIAL:
        return _finish(_cartier_identity_t(ctx, A, reduced, order))
    return _finish(_cartier_identity_x(ctx, A, reduced, order))


def _inverse_power_in_t(f: LaurentPoly, rho: int, order: int, modulus: int) -> LaurentPoly:
    """1/f^rho = sum_k binom(rho+k-1, k) h^k with h = 1 - f, truncated below t^order."""
    h = (LaurentPoly.one(f.nvars, f.ring) - f).reduce_mod(modulus)
    if h.t_coefficient(0):
        raise PreconditionError("t-adic expansion needs f = 1 mod t")
    total = LaurentPoly.zero(f.nvars, f.ring)
    power = LaurentPoly.one(f.nvars, f.ring)
    for k in range(order):
        total = total + power * comb(rho + k - 1, k)
        power = (power * h).truncate_t(order).reduce_mod(modulus)
        if power.is_zero():
            break
    return total.reduce_mod(modulus)


def _cartier_identity_t(ctx, A, reduced, order: int) -> VerificationReport:
    m = ctx.modulus
    A = A.lift() if A.ring is not CoefficientRing.POLYNOMIAL else A
    left = cartier_select(
        (A * _inverse_power_in_t(ctx.f, ctx.rho, order, m)).truncate_t(order), ctx.p
    ).reduce_mod(m)
    N = LaurentPoly({e: c.lift() for e, c in reduced.items()}, ctx.f.nvars, ctx.f.ring)
    sigma_inverse = _inverse_power_in_t(ctx.f.apply_sigma(ctx.p), ctx.rho, order, m)
    right = (N * sigma_inverse).truncate_t(order).reduce_mod(m)

    report = VerificationReport(f"cartier identity p={ctx.p} r={ctx.r} (t-adic)")
    for exp in sorted(set(left.support) | set(right.support)):
        for j in range(order):
            lhs = left.coefficient(exp).coefficient(j)
            rhs = right.coefficient(exp).coefficient(j)
            report.record(lhs == rhs, j, list(exp), lhs, rhs)
    return report


def _cartier_identity_x(ctx, A, reduced, order: int) -> VerificationReport:
    m, p, n = ctx.modulus, ctx.p, ctx.f.nvars
    if ctx.f.constant_term() % p == 0:
        raise PreconditionError("x-adic expansion needs p not dividing f(0)")
    lowest = [min(0, min(e[i] for e in A.support)) if A else 0 for i in range(n)]
    hi = [p * order - low for low in lowest]
    inverse = series_inverse(ctx.f.pow(ctx.rho), hi, modulus=m)

    report = VerificationReport(f"cartier identity p={p} r={ctx.r} (x-adic)")
    for k in itertools.product(range(order + 1), repeat=n):
        lhs = 0
        for a, c in A.terms.items():
            shifted = tuple(p * ki - ai for ki, ai in zip(k, a))
            if min(shifted) >= 0:
                lhs += c * inverse[shifted]
        rhs = 0
        for w, c in reduced.items():
            shifted = tuple(ki - wi for ki, wi in zip(k, w))
            if min(shifted) >= 0:
                rhs += c.value * inverse[shifted]
        report.record(lhs % m == rhs % m, list(k), "x", lhs % m, rhs % m)
    return report
