"""
Brute-force oracles.

These compute sequence values and scheme state vectors directly from their
definitions, independently of the Cartier construction, for small indices.
"""

from __future__ import annotations

import itertools
import logging
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence, Union

from plinear.config import Settings, get_settings
from plinear.exceptions import (
    ArithmeticConsistencyError,
    NotFullDimensionalError,
    OracleCapExceededError,
)
from plinear.geometry import membership, newton_polytope
from plinear.models import CTScheme, RatScheme
from plinear.rings import ExpVec, LaurentPoly

logger = logging.getLogger(__name__)

SeriesCoefficient = Union[int, Fraction]


def _pruned(poly: LaurentPoly, keep) -> LaurentPoly:
    return LaurentPoly({e: c for e, c in poly.terms.items() if keep(e)}, poly.nvars)


def constant_term_table(
    g: LaurentPoly,
    targets: Iterable[ExpVec],
    kmax: int,
    q: Optional[LaurentPoly] = None,
    modulus: Optional[int] = None,
) -> List[Dict[ExpVec, int]]:
    """
    table[k][u] = ct[x^u * q * g^k] for k <= kmax and every target u.

    Powers are formed by repeated multiplication with g. When 0 lies in
    Newton(g), terms that can no longer reach any target within the remaining
    steps are dropped, which leaves the requested values unchanged.
    """
    targets = [tuple(u) for u in targets]
    n = g.nvars
    power = q if q is not None else LaurentPoly.one(n)
    try:
        polytope = newton_polytope(g.support)
    except NotFullDimensionalError:
        polytope = None
    if not targets or (polytope is not None and not membership(polytope, (0,) * n, 1, False)):
        polytope = None

    if polytope is not None:
        reach = [max(f.value(u) for u in targets) for f in polytope.facets]

        def reachable(e: ExpVec, steps: int) -> bool:
            # -u - e must lie in steps * Newton(g) for some target u
            return all(
                -f.value(e) <= steps * f.offset + slack
                for f, slack in zip(polytope.facets, reach)
            )

    table = []
    for k in range(kmax + 1):
        if modulus is not None:
            power = power.reduce_mod(modulus)
        if polytope is not None:
            steps = kmax - k
            power = _pruned(power, lambda e: reachable(e, steps))
        table.append({u: power.coefficient(tuple(-x for x in u)) for u in targets})
        if k < kmax:
            power = power * g
    return table


def ct_oracle(
    g: LaurentPoly,
    q: Optional[LaurentPoly],
    u: ExpVec,
    k: int,
    settings: Optional[Settings] = None,
) -> int:
    """
    ct[x^u * q * g^k] computed exactly.

    Raises:
        OracleCapExceededError: If k exceeds the configured cap for g's variable count
    """
    settings = settings or get_settings()
    cap = settings.ct_cap(g.nvars)
    if k > cap:
        raise OracleCapExceededError(f"k={k} exceeds the constant-term oracle cap {cap}")
    return constant_term_table(g, [tuple(u)], k, q=q)[k][tuple(u)]


def _box(hi: Sequence[int]):
    return itertools.product(*(range(h + 1) for h in hi))


def series_inverse(
    P: LaurentPoly, hi: Sequence[int], modulus: Optional[int] = None
) -> Dict[ExpVec, SeriesCoefficient]:
    """
    Coefficients of 1/P over the box [0, hi_1] x ... x [0, hi_n].

    Solves P * S = 1 one coefficient at a time in lexicographic order. With a
    modulus the result lies in Z/modulus (P(0) must be a unit); otherwise
    coefficients are exact rationals, or integers when P(0) = +-1.
    """
    P0 = P.constant_term()
    if P0 == 0:
        raise ArithmeticConsistencyError("P(0) = 0: 1/P has no power series expansion")
    terms = [(e, c) for e, c in P.terms.items() if any(e)]
    if modulus is not None:
        inverse = pow(P0, -1, modulus)
    elif P0 in (1, -1):
        inverse = P0
    else:
        inverse = Fraction(1, P0)

    S: Dict[ExpVec, SeriesCoefficient] = {}
    origin = (0,) * P.nvars
    for k in _box(hi):
        acc = 1 if k == origin else 0
        for e, c in terms:
            shifted = tuple(a - b for a, b in zip(k, e))
            if min(shifted) >= 0:
                acc -= c * S[shifted]
        value = acc * inverse
        S[k] = value % modulus if modulus is not None else value
    return S


def series_coefficients(
    P: LaurentPoly,
    Q: LaurentPoly,
    hi: Sequence[int],
    modulus: Optional[int] = None,
) -> Dict[ExpVec, SeriesCoefficient]:
    """Coefficients of Q/P over the box [0, hi]."""
    S = series_inverse(P, hi, modulus)
    out = {}
    for k in _box(hi):
        acc = 0
        for w, c in Q.terms.items():
            shifted = tuple(a - b for a, b in zip(k, w))
            if min(shifted) >= 0:
                acc += c * S[shifted]
        out[k] = acc % modulus if modulus is not None else Fraction(acc)
    return out


def series_oracle(
    P: LaurentPoly,
    Q: LaurentPoly,
    K: Sequence[int],
    settings: Optional[Settings] = None,
) -> Fraction:
    """
    The coefficient of x^K in Q/P, exactly; its denominator is a power of P(0).

    Raises:
        OracleCapExceededError: If the total degree of K exceeds the series cap
    """
    settings = settings or get_settings()
    K = tuple(int(x) for x in K)
    if sum(K) > settings.series_cap:
        raise OracleCapExceededError(
            f"Index {K} exceeds the series oracle cap {settings.series_cap}"
        )
    return series_coefficients(P, Q, K)[K]


def ct_state_vectors(
    s: CTScheme, kmax: int, modulus: Optional[int] = None
) -> List[List[int]]:
    """
    Exact state vectors a_0, ..., a_kmax of a constant-term scheme.

    Entry (l, u) at k is binom(rho+k-l-1, k-l) * ct[x^u g^(k-l)], zero for k < l.
    """
    interior = s.interior_points()
    table = constant_term_table(s.g, interior, kmax, modulus=modulus)
    vectors = []
    for k in range(kmax + 1):
        row = []
        for ell, u in s.states:
            j = k - ell
            value = comb(s.rho + j - 1, j) * table[j][u] if j >= 0 else 0
            row.append(value % modulus if modulus is not None else value)
        vectors.append(row)
    return vectors


def rat_state_vector(
    s: RatScheme, K: Sequence[int], inverse: Dict[ExpVec, SeriesCoefficient]
) -> List[SeriesCoefficient]:
    """Entry u: the coefficient of x^(K-u) in 1/P^rho, read from a precomputed series."""
    vector = []
    for u in s.states:
        shifted = tuple(a - b for a, b in zip(K, u))
        vector.append(inverse[shifted] if min(shifted) >= 0 else 0)
    return vector


def state_vector_oracle(
    s: Union[CTScheme, RatScheme], k, settings: Optional[Settings] = None
) -> List[SeriesCoefficient]:
    """
    The exact state vector of a scheme at a small index.

    For constant-term schemes ``k`` is an integer; for rational schemes it is
    an index vector and the entries are rationals.
    """
    settings = settings or get_settings()
    if isinstance(s, CTScheme):
        cap = settings.ct_cap(s.n)
        if k > cap:
            raise OracleCapExceededError(f"k={k} exceeds the constant-term oracle cap {cap}")
        return ct_state_vectors(s, k)[k]
    K = tuple(int(x) for x in k)
    if sum(K) > settings.series_cap:
        raise OracleCapExceededError(f"Index {K} exceeds the series oracle cap")
    inverse = series_inverse(s.P.pow(s.rho), K)
    return [Fraction(v) for v in rat_state_vector(s, K, inverse)]
