"""Multivariate Laurent polynomials over Z or Z[t]."""

from __future__ import annotations

import operator
from collections import defaultdict
from enum import Enum
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from plinear.exceptions import ArithmeticConsistencyError, RingMismatchError
from plinear.rings.tpoly import TPoly

ExpVec = Tuple[int, ...]
Coefficient = Union[int, TPoly]


class CoefficientRing(str, Enum):
    """Coefficient ring of a Laurent polynomial."""

    INTEGER = "ZZ"
    POLYNOMIAL = "ZZ[t]"


def add_exponents(a: ExpVec, b: ExpVec) -> ExpVec:
    return tuple(map(operator.add, a, b))


class LaurentPoly:
    """
    Immutable Laurent polynomial in n variables.

    Terms are kept in a map from exponent vectors to nonzero coefficients,
    iterated in lexicographic order of the exponent vectors. Over the ring
    Z[t] every coefficient is an integer ``TPoly``.
    """

    __slots__ = ("_terms", "_nvars", "_ring")

    def __init__(
        self,
        terms: Mapping[ExpVec, Coefficient],
        nvars: int,
        ring: CoefficientRing = CoefficientRing.INTEGER,
    ):
        if nvars < 1:
            raise ValueError("A Laurent polynomial needs at least one variable")
        clean: Dict[ExpVec, Coefficient] = {}
        for exp, coeff in terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise RingMismatchError(
                    f"Exponent vector {exp} does not have {nvars} components"
                )
            coeff = self._normalize_coefficient(coeff, ring)
            if coeff:
                clean[exp] = coeff
        self._terms = {exp: clean[exp] for exp in sorted(clean)}
        self._nvars = nvars
        self._ring = ring

    @staticmethod
    def _normalize_coefficient(coeff, ring: CoefficientRing) -> Coefficient:
        if ring is CoefficientRing.INTEGER:
            if isinstance(coeff, TPoly) or not isinstance(coeff, int):
                raise RingMismatchError(f"Coefficient {coeff!r} is not an integer")
            return coeff
        if isinstance(coeff, int):
            return TPoly.constant(coeff)
        if isinstance(coeff, TPoly):
            if coeff.modulus is not None:
                raise RingMismatchError("Laurent coefficients must be integer t-polynomials")
            return coeff
        raise RingMismatchError(f"Coefficient {coeff!r} is not a t-polynomial")

    # -- construction -----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int, ring: CoefficientRing = CoefficientRing.INTEGER) -> "LaurentPoly":
        return cls({}, nvars, ring)

    @classmethod
    def constant(
        cls, c: Coefficient, nvars: int, ring: CoefficientRing = CoefficientRing.INTEGER
    ) -> "LaurentPoly":
        return cls({(0,) * nvars: c}, nvars, ring)

    @classmethod
    def one(cls, nvars: int, ring: CoefficientRing = CoefficientRing.INTEGER) -> "LaurentPoly":
        return cls.constant(1, nvars, ring)

    @classmethod
    def monomial(
        cls,
        exponent: Iterable[int],
        coeff: Coefficient = 1,
        ring: CoefficientRing = CoefficientRing.INTEGER,
    ) -> "LaurentPoly":
        exponent = tuple(exponent)
        return cls({exponent: coeff}, len(exponent), ring)

    @classmethod
    def variable(cls, index: int, nvars: int) -> "LaurentPoly":
        exp = [0] * nvars
        exp[index] = 1
        return cls.monomial(exp)

    # -- accessors ----------------------------------------------------------

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def ring(self) -> CoefficientRing:
        return self._ring

    @property
    def terms(self) -> Mapping[ExpVec, Coefficient]:
        return MappingProxyType(self._terms)

    @property
    def support(self) -> Tuple[ExpVec, ...]:
        return tuple(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def _zero_coefficient(self) -> Coefficient:
        return 0 if self._ring is CoefficientRing.INTEGER else TPoly()

    def coefficient(self, exponent: Iterable[int]) -> Coefficient:
        return self._terms.get(tuple(exponent), self._zero_coefficient())

    def constant_term(self) -> Coefficient:
        return self.coefficient((0,) * self._nvars)

    @property
    def t_degree(self) -> int:
        """Largest t-degree of a coefficient (0 over Z, -1 for the zero polynomial)."""
        if not self._terms:
            return -1
        if self._ring is CoefficientRing.INTEGER:
            return 0
        return max(c.degree for c in self._terms.values())

    # -- arithmetic ---------------------------------------------------------

    def _check_compatible(self, other: "LaurentPoly") -> None:
        if other._nvars != self._nvars:
            raise RingMismatchError(
                f"Variable counts differ: {self._nvars} and {other._nvars}"
            )
        if other._ring is not self._ring:
            raise RingMismatchError(
                f"Coefficient rings differ: {self._ring.value} and {other._ring.value}"
            )

    def _as_poly(self, other) -> Optional["LaurentPoly"]:
        if isinstance(other, LaurentPoly):
            self._check_compatible(other)
            return other
        if isinstance(other, (int, TPoly)):
            return LaurentPoly.constant(other, self._nvars, self._ring)
        return None

    def __add__(self, other):
        other = self._as_poly(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for exp, coeff in other._terms.items():
            terms[exp] = terms[exp] + coeff if exp in terms else coeff
        return LaurentPoly(terms, self._nvars, self._ring)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()}, self._nvars, self._ring)

    def __sub__(self, other):
        other = self._as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._as_poly(other)
        if other is None:
            return NotImplemented
        if self._ring is CoefficientRing.INTEGER:
            return LaurentPoly(_multiply_integer(self._terms, other._terms), self._nvars)
        product = _multiply_integer(self._flatten(), other._flatten())
        return LaurentPoly._unflatten(product, self._nvars)

    __rmul__ = __mul__

    def pow(self, exponent: int, modulus: Optional[int] = None) -> "LaurentPoly":
        """
        Binary powering.

        Args:
            exponent: Exponent; negative values are allowed for unit monomials only
            modulus: If given, every coefficient is reduced into [0, modulus)
                after each multiplication

        Returns:
            self ** exponent (coefficientwise reduced when modulus is given)
        """
        if exponent < 0:
            if len(self._terms) == 1:
                (exp, coeff), = self._terms.items()
                if isinstance(coeff, TPoly):
                    coeff = coeff.coefficient(0) if coeff.degree == 0 else 0
                if coeff in (1, -1):
                    return LaurentPoly(
                        {tuple(exponent * e for e in exp): coeff ** (-exponent)},
                        self._nvars,
                        self._ring,
                    )
            raise ValueError("Negative powers are only defined for unit monomials")
        result = LaurentPoly.one(self._nvars, self._ring)
        base = self.reduce_mod(modulus) if modulus else self
        while exponent:
            if exponent & 1:
                result = result * base
                if modulus:
                    result = result.reduce_mod(modulus)
            exponent >>= 1
            if exponent:
                base = base * base
                if modulus:
                    base = base.reduce_mod(modulus)
        return result

    def __pow__(self, exponent: int) -> "LaurentPoly":
        return self.pow(exponent)

    def shift(self, exponent: Iterable[int]) -> "LaurentPoly":
        """Multiply by the monomial x^exponent."""
        exponent = tuple(exponent)
        return LaurentPoly(
            {add_exponents(e, exponent): c for e, c in self._terms.items()},
            self._nvars,
            self._ring,
        )

    def apply_sigma(self, p: int) -> "LaurentPoly":
        """Apply t -> t^p to the coefficients; integer coefficients are fixed."""
        if self._ring is CoefficientRing.INTEGER:
            return self
        return LaurentPoly(
            {e: c.frobenius(p) for e, c in self._terms.items()}, self._nvars, self._ring
        )

    def frobenius(self, p: int) -> "LaurentPoly":
        """The Frobenius lift a^sigma(x^p): exponents times p and t -> t^p."""
        return LaurentPoly(
            {tuple(p * x for x in e): c for e, c in self.apply_sigma(p)._terms.items()},
            self._nvars,
            self._ring,
        )

    def reduce_mod(self, modulus: int) -> "LaurentPoly":
        """Reduce every coefficient into [0, modulus), keeping the coefficient ring."""
        if self._ring is CoefficientRing.INTEGER:
            terms = {e: c % modulus for e, c in self._terms.items()}
        else:
            terms = {e: TPoly([x % modulus for x in c.coeffs]) for e, c in self._terms.items()}
        return LaurentPoly(terms, self._nvars, self._ring)

    def exact_divide(self, d: int) -> "LaurentPoly":
        """
        Divide every coefficient by the integer d.

        Raises:
            ArithmeticConsistencyError: If some coefficient is not divisible by d
        """
        flat = self._flatten() if self._ring is CoefficientRing.POLYNOMIAL else self._terms
        out = {}
        for key, c in flat.items():
            q, rem = divmod(c, d)
            if rem:
                raise ArithmeticConsistencyError(f"Coefficient {c} at {key} is not divisible by {d}")
            out[key] = q
        if self._ring is CoefficientRing.POLYNOMIAL:
            return LaurentPoly._unflatten(out, self._nvars)
        return LaurentPoly(out, self._nvars)

    def lift(self) -> "LaurentPoly":
        """View an integer Laurent polynomial as one over Z[t]."""
        if self._ring is CoefficientRing.POLYNOMIAL:
            return self
        return LaurentPoly(dict(self._terms), self._nvars, CoefficientRing.POLYNOMIAL)

    def t_coefficient(self, j: int) -> "LaurentPoly":
        """The integer Laurent polynomial multiplying t^j."""
        if self._ring is CoefficientRing.INTEGER:
            return self if j == 0 else LaurentPoly.zero(self._nvars)
        return LaurentPoly(
            {e: c.coefficient(j) for e, c in self._terms.items()}, self._nvars
        )

    def truncate_t(self, order: int) -> "LaurentPoly":
        """Drop all t^j with j >= order."""
        if self._ring is CoefficientRing.INTEGER:
            return self if order > 0 else LaurentPoly.zero(self._nvars)
        return LaurentPoly(
            {e: c.truncate(order) for e, c in self._terms.items()}, self._nvars, self._ring
        )

    # -- flattening: t becomes the last exponent ------------------------------

    def _flatten(self) -> Dict[ExpVec, int]:
        flat = {}
        for exp, coeff in self._terms.items():
            for j, c in enumerate(coeff.coeffs):
                if c:
                    flat[exp + (j,)] = c
        return flat

    @staticmethod
    def _unflatten(flat: Mapping[ExpVec, int], nvars: int) -> "LaurentPoly":
        grouped: Dict[ExpVec, Dict[int, int]] = defaultdict(dict)
        for key, c in flat.items():
            grouped[key[:-1]][key[-1]] = c
        terms = {}
        for exp, by_degree in grouped.items():
            coeffs = [0] * (max(by_degree) + 1)
            for j, c in by_degree.items():
                coeffs[j] = c
            terms[exp] = TPoly(coeffs)
        return LaurentPoly(terms, nvars, CoefficientRing.POLYNOMIAL)

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return (
                self._nvars == other._nvars
                and self._ring is other._ring
                and self._terms == other._terms
            )
        if isinstance(other, (int, TPoly)):
            return self == LaurentPoly.constant(other, self._nvars, self._ring)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._nvars, self._ring, tuple(self._terms.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{e}: {c}" for e, c in self._terms.items())
        return f"LaurentPoly({{{body}}}, nvars={self._nvars}, ring={self._ring.value})"


def _multiply_integer(
    a: Mapping[ExpVec, int], b: Mapping[ExpVec, int]
) -> Dict[ExpVec, int]:
    acc: Dict[ExpVec, int] = defaultdict(int)
    for ea, ca in a.items():
        for eb, cb in b.items():
            acc[add_exponents(ea, eb)] += ca * cb
    return acc
