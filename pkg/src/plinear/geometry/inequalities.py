"""Exact Fourier-Motzkin elimination for systems with strict and weak inequalities."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple


@dataclass(frozen=True)
class Inequality:
    """The constraint ``sum(coeffs[i] * z[i]) < bound`` (or ``<=`` when not strict)."""

    coeffs: Tuple[Fraction, ...]
    bound: Fraction
    strict: bool

    @classmethod
    def make(cls, coeffs: Iterable, bound, strict: bool) -> "Inequality":
        return cls(tuple(Fraction(c) for c in coeffs), Fraction(bound), strict)

    def normalized(self) -> "Inequality":
        """Scale so that the first nonzero coefficient has absolute value 1."""
        for c in self.coeffs:
            if c:
                scale = abs(c)
                return Inequality(
                    tuple(x / scale for x in self.coeffs), self.bound / scale, self.strict
                )
        return self

    def is_trivial(self) -> bool:
        return not any(self.coeffs)

    def trivially_holds(self) -> bool:
        return self.bound > 0 if self.strict else self.bound >= 0


def _combine(upper: Inequality, lower: Inequality, j: int) -> Inequality:
    a, b = upper.coeffs[j], -lower.coeffs[j]
    return Inequality(
        tuple(u / a + w / b for u, w in zip(upper.coeffs, lower.coeffs)),
        upper.bound / a + lower.bound / b,
        upper.strict or lower.strict,
    ).normalized()


def eliminate(system: Sequence[Inequality], j: int) -> List[Inequality]:
    """Project the system onto the coordinates other than ``j``."""
    upper = [q for q in system if q.coeffs[j] > 0]
    lower = [q for q in system if q.coeffs[j] < 0]
    rest = [q for q in system if q.coeffs[j] == 0]
    combined = [_combine(u, w, j) for u in upper for w in lower]
    seen = set()
    out = []
    for q in rest + combined:
        if q in seen:
            continue
        seen.add(q)
        out.append(q)
    return out


def is_feasible(system: Sequence[Inequality]) -> bool:
    """
    Decide whether some real vector satisfies every inequality.

    Eliminates the variables one at a time; strictness propagates to every
    combination that uses a strict row.
    """
    system = [q.normalized() for q in system]
    if not system:
        return True
    nvars = len(system[0].coeffs)
    for j in range(nvars):
        for q in system:
            if q.is_trivial() and not q.trivially_holds():
                return False
        system = [q for q in system if not q.is_trivial()]
        system = eliminate(system, j)
    return all(q.trivially_holds() for q in system)
