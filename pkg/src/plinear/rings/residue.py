"""Residue classes modulo prime powers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from plinear.exceptions import ArithmeticConsistencyError, RingMismatchError


@dataclass(frozen=True)
class Modulus:
    """The ring Z/p^e described by its prime and exponent."""

    p: int
    e: int

    def __post_init__(self):
        if self.p < 2 or self.e < 1:
            raise ValueError(f"Invalid modulus p={self.p}, e={self.e}")

    @property
    def value(self) -> int:
        """The integer p^e."""
        return self.p ** self.e

    def __str__(self) -> str:
        return f"{self.p}^{self.e}"


@dataclass(frozen=True)
class Residue:
    """
    Element of Z/p^e stored as its canonical representative.

    Integers act as scalars through the canonical map Z -> Z/p^e. Operations
    between residues of different moduli are rejected.
    """

    value: int
    modulus: Modulus

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.modulus.value)

    @classmethod
    def from_rational(cls, value: Union[int, Fraction], modulus: Modulus) -> "Residue":
        """
        Map an integer or a p-integral rational into Z/p^e.

        Raises:
            ArithmeticConsistencyError: If the denominator is divisible by p
        """
        value = Fraction(value)
        if value.denominator % modulus.p == 0:
            raise ArithmeticConsistencyError(
                f"{value} is not p-integral for p={modulus.p}"
            )
        m = modulus.value
        return cls(value.numerator * pow(value.denominator, -1, m), modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise RingMismatchError(
                    f"Cannot combine residues mod {self.modulus} and mod {other.modulus}"
                )
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return Residue(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return Residue(self.value - v, self.modulus)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return Residue(v - self.value, self.modulus)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return Residue(self.value * v, self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> "Residue":
        return Residue(-self.value, self.modulus)

    def __pow__(self, exponent: int) -> "Residue":
        return Residue(pow(self.value, exponent, self.modulus.value), self.modulus)

    def inverse(self) -> "Residue":
        """
        Multiplicative inverse.

        Raises:
            ArithmeticConsistencyError: If the residue is not a unit
        """
        if self.value % self.modulus.p == 0:
            raise ArithmeticConsistencyError(f"{self} is not a unit")
        return Residue(pow(self.value, -1, self.modulus.value), self.modulus)

    def __eq__(self, other) -> bool:
        if isinstance(other, Residue):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus.value
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.modulus))

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return f"{self.value} (mod {self.modulus.value})"
