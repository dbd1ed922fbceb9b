"""Dense univariate polynomials in t over Z or Z/m."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from plinear.exceptions import DegreeOverflowError, RingMismatchError


def _trim(coeffs: Sequence[int]) -> Tuple[int, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


@dataclass(frozen=True)
class TPoly:
    """
    Polynomial c_0 + c_1 t + ... stored as a trimmed coefficient tuple.

    ``modulus=None`` means integer coefficients; otherwise coefficients live
    in Z/modulus and are kept in [0, modulus). Polynomials over different
    coefficient rings never mix; plain integers act as constants.
    """

    coeffs: Tuple[int, ...] = ()
    modulus: Optional[int] = None

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if self.modulus is not None:
            coeffs = tuple(c % self.modulus for c in coeffs)
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def constant(cls, c: int, modulus: Optional[int] = None) -> "TPoly":
        return cls((c,), modulus)

    @classmethod
    def monomial(cls, degree: int, c: int = 1, modulus: Optional[int] = None) -> "TPoly":
        return cls((0,) * degree + (c,), modulus)

    @property
    def degree(self) -> int:
        """Degree in t; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def _other_coeffs(self, other) -> Optional[Tuple[int, ...]]:
        if isinstance(other, TPoly):
            if other.modulus != self.modulus:
                raise RingMismatchError(
                    f"Cannot combine t-polynomials over Z/{self.modulus} and Z/{other.modulus}"
                )
            return other.coeffs
        if isinstance(other, int):
            return (other,)
        return None

    def __add__(self, other):
        b = self._other_coeffs(other)
        if b is None:
            return NotImplemented
        a = self.coeffs
        n = max(len(a), len(b))
        return TPoly(
            [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)],
            self.modulus,
        )

    __radd__ = __add__

    def __neg__(self) -> "TPoly":
        return TPoly([-c for c in self.coeffs], self.modulus)

    def __sub__(self, other):
        b = self._other_coeffs(other)
        if b is None:
            return NotImplemented
        return self + TPoly([-c for c in b], self.modulus)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        b = self._other_coeffs(other)
        if b is None:
            return NotImplemented
        a = self.coeffs
        if not a or not b:
            return TPoly((), self.modulus)
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return TPoly(out, self.modulus)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TPoly":
        if exponent < 0:
            raise ValueError("Negative powers of t-polynomials are not defined")
        result = TPoly.constant(1, self.modulus)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, TPoly):
            return self.modulus == other.modulus and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == TPoly.constant(other, self.modulus)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.coeffs, self.modulus))

    def frobenius(self, p: int) -> "TPoly":
        """Substitute t -> t^p."""
        out = [0] * (p * self.degree + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[p * i] = c
        return TPoly(out, self.modulus)

    def reduce(self, modulus: int) -> "TPoly":
        """Image in (Z/modulus)[t]; only integer polynomials can be reduced."""
        if self.modulus is not None and self.modulus != modulus:
            raise RingMismatchError(
                f"Cannot reduce a polynomial over Z/{self.modulus} modulo {modulus}"
            )
        return TPoly(self.coeffs, modulus)

    def lift(self) -> "TPoly":
        """Integer polynomial with the canonical representatives as coefficients."""
        return TPoly(self.coeffs, None)

    def truncate(self, order: int) -> "TPoly":
        """Drop all terms of degree >= order."""
        return TPoly(self.coeffs[:order], self.modulus)

    def shift(self, k: int) -> "TPoly":
        """Multiply by t^k."""
        if not self.coeffs:
            return self
        return TPoly((0,) * k + self.coeffs, self.modulus)

    def __call__(self, value: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc % self.modulus if self.modulus is not None else acc

    def __repr__(self) -> str:
        return f"TPoly({list(self.coeffs)}, modulus={self.modulus})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*t" if c != 1 else "t")
            else:
                parts.append(f"{c}*t^{i}" if c != 1 else f"t^{i}")
        return " + ".join(parts)


def tpoly_digit_slice(q: TPoly, p: int, ell: int, slices: int) -> List[TPoly]:
    """
    Split t^ell * q(t) into base-p blocks.

    Returns lambda_0, ..., lambda_{slices-1}, each of degree < p, with
    t^ell q(t) = sum_m lambda_m(t) t^(p m) holding exactly.

    Raises:
        DegreeOverflowError: If deg(t^ell q) > p * slices - 1
    """
    shifted = q.shift(ell)
    if shifted.degree > p * slices - 1:
        raise DegreeOverflowError(
            f"deg(t^{ell} q) = {shifted.degree} exceeds {p * slices - 1} (p={p}, slices={slices})"
        )
    coeffs = shifted.coeffs
    return [TPoly(coeffs[p * m: p * (m + 1)], q.modulus) for m in range(slices)]


def tpoly_from_digits(blocks: Iterable[TPoly], p: int) -> TPoly:
    """Reassemble sum_m blocks[m](t) t^(p m)."""
    result: Optional[TPoly] = None
    for m, block in enumerate(blocks):
        term = block.shift(p * m)
        result = term if result is None else result + term
    return result if result is not None else TPoly()
