"""Precomputed data for the Cartier operator modulo p^r."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, Optional

from plinear.exceptions import PreconditionError
from plinear.geometry import (
    LatticePointSet,
    Polytope,
    RegionKind,
    box_closure_points,
    dilated_interior_points,
    region_contains,
)
from plinear.rings import LaurentPoly

logger = logging.getLogger(__name__)


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def choose_rho(p: int, r: int) -> int:
    """Smallest rho >= 1 with rho - ceil(rho/p) >= r - 1 (never more than 2r)."""
    if p < 2 or r < 1:
        raise ValueError(f"Invalid parameters p={p}, r={r}")
    rho = 1
    while rho - ceil_div(rho, p) < r - 1:
        rho += 1
    return rho


def compute_G(f: LaurentPoly, p: int) -> LaurentPoly:
    """
    The Laurent polynomial G with f(x)^p = f^sigma(x^p) - p*G(x).

    Raises:
        ArithmeticConsistencyError: If the difference is not divisible by p
    """
    return (f.frobenius(p) - f.pow(p)).exact_divide(p)


@dataclass(frozen=True)
class StateRegion:
    """Lattice points of rho*mu for mu the interior of a polytope or its box closure."""

    kind: RegionKind
    polytope: Polytope
    rho: int
    points: LatticePointSet

    @classmethod
    def build(cls, kind: RegionKind, polytope: Polytope, rho: int) -> "StateRegion":
        if kind is RegionKind.INTERIOR:
            points = dilated_interior_points(polytope, rho)
        else:
            points = box_closure_points(polytope, rho)
        return cls(kind, polytope, rho, points)

    def contains(self, point, scale: Optional[int] = None) -> bool:
        """Membership in scale*mu (rho*mu by default)."""
        return region_contains(self.polytope, self.kind, point, scale or self.rho)

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class CartierContext:
    """
    Everything cartier_reduce needs for one denominator f, prime p and precision r.

    All caches are filled by ``create``; the context is read-only afterwards
    and may be shared between threads.
    """

    f: LaurentPoly
    p: int
    r: int
    rho: int
    G: LaurentPoly
    f_powers: Dict[int, LaurentPoly] = field(repr=False)
    sigma_powers: Dict[int, LaurentPoly] = field(repr=False)
    numerator_factors: Dict[int, LaurentPoly] = field(repr=False)

    @classmethod
    def create(
        cls, f: LaurentPoly, p: int, r: int, rho: Optional[int] = None
    ) -> "CartierContext":
        rho = choose_rho(p, r) if rho is None else rho
        c = ceil_div(rho, p)
        if rho - c < r - 1:
            raise PreconditionError(
                f"rho={rho} is too small for r={r}: need rho - ceil(rho/p) >= r - 1"
            )
        G = compute_G(f, p)
        f_sigma = f.apply_sigma(p)

        f_powers = {0: LaurentPoly.one(f.nvars, f.ring)}
        for j in range(1, max(p * c - rho, rho - 1) + 1):
            f_powers[j] = f_powers[j - 1] * f
        sigma_powers = {0: LaurentPoly.one(f.nvars, f.ring)}
        for j in range(1, rho - c + 1):
            sigma_powers[j] = sigma_powers[j - 1] * f_sigma

        # G^m * f^(p*c - rho) for every m < r
        numerator_factors = {0: f_powers[p * c - rho]}
        for m in range(1, r):
            numerator_factors[m] = numerator_factors[m - 1] * G

        logger.debug(
            "Cartier context p=%d r=%d rho=%d: |supp G|=%d, t-degree bound %d",
            p, r, rho, len(G), f.t_degree * (p - 1) * rho,
        )
        return cls(f, p, r, rho, G, f_powers, sigma_powers, numerator_factors)

    @property
    def c(self) -> int:
        """ceil(rho / p)."""
        return ceil_div(self.rho, self.p)

    @property
    def modulus(self) -> int:
        return self.p ** self.r

    def f_power(self, j: int) -> LaurentPoly:
        cached = self.f_powers.get(j)
        return cached if cached is not None else self.f.pow(j)

    def t_degree_bound(self) -> int:
        """Largest t-degree a reduced numerator may have: deg_t(f) * (p-1) * rho."""
        return max(self.f.t_degree, 0) * (self.p - 1) * self.rho
