"""Newton polytopes and their lattice points."""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from sympy import Matrix, ilcm

from plinear.exceptions import (
    MinkowskiPropertyError,
    NotFullDimensionalError,
    PreconditionError,
)
from plinear.geometry.inequalities import Inequality, is_feasible
from plinear.rings.laurent import ExpVec

logger = logging.getLogger(__name__)

RationalVector = Tuple[Fraction, ...]


class RegionKind(str, Enum):
    """Which open region of a dilated polytope a lattice point set describes."""

    INTERIOR = "interior-dilation"
    BOX_CLOSURE = "box-closure"


@dataclass(frozen=True)
class Facet:
    """The inequality <normal, x> <= offset."""

    normal: ExpVec
    offset: int

    def value(self, point: Sequence) -> Fraction:
        return sum(a * x for a, x in zip(self.normal, point))


@dataclass(frozen=True)
class Polytope:
    """
    Full-dimensional lattice polytope in both vertex and facet form.

    Facet normals are primitive outward integer vectors; facets are sorted.
    """

    vertices: Tuple[ExpVec, ...]
    facets: Tuple[Facet, ...]
    dimension: int

    @property
    def nvars(self) -> int:
        return len(self.vertices[0])

    def max_coordinates(self) -> ExpVec:
        """d_i = largest i-th vertex coordinate."""
        return tuple(max(v[i] for v in self.vertices) for i in range(self.nvars))

    def min_coordinates(self) -> ExpVec:
        return tuple(min(v[i] for v in self.vertices) for i in range(self.nvars))

    def contains(self, point: Sequence, rho: int = 1, strict: bool = False) -> bool:
        """True iff <a, point> < rho*c (strict) or <= rho*c for every facet (a, c)."""
        if strict:
            return all(f.value(point) < rho * f.offset for f in self.facets)
        return all(f.value(point) <= rho * f.offset for f in self.facets)

    def in_box_closure(self, point: Sequence, rho: int = 1) -> bool:
        """
        True iff point lies in B(rho * interior).

        That is, point >= 0 and some real z with point <= z lies in the open
        polytope rho * interior.
        """
        if any(y < 0 for y in point):
            return False
        n = self.nvars
        system = [Inequality.make(f.normal, rho * f.offset, True) for f in self.facets]
        for i, y in enumerate(point):
            row = [0] * n
            row[i] = -1
            system.append(Inequality.make(row, -Fraction(y), False))
        return is_feasible(system)


def membership(poly: Polytope, point: Sequence, rho: int = 1, strict: bool = True) -> bool:
    """Shared facet predicate; see Polytope.contains."""
    return poly.contains(point, rho, strict)


def _hyperplane_normal(points: Sequence[ExpVec]) -> ExpVec:
    """Primitive integer normal of the affine hull of n points in Z^n (zero if degenerate)."""
    base = points[0]
    n = len(base)
    if n == 1:
        return (1,)
    diffs = [a - b for q in points[1:] for a, b in zip(q, base)]
    kernel = Matrix(len(points) - 1, n, diffs).nullspace()
    if len(kernel) != 1:
        return (0,) * n
    vector = kernel[0] * reduce(ilcm, (entry.q for entry in kernel[0]), 1)
    normal = [int(entry) for entry in vector]
    g = reduce(gcd, normal, 0)
    return tuple(x // g for x in normal)


def newton_polytope(support: Iterable[Sequence[int]]) -> Polytope:
    """
    Convex hull of a finite set of lattice points.

    Facets are found by exhaustive search: every hyperplane through n affinely
    independent support points that has all points on one closed side.

    Raises:
        NotFullDimensionalError: If the hull has empty interior in R^n
    """
    points = sorted({tuple(int(x) for x in pt) for pt in support})
    if not points:
        raise ValueError("Support must be nonempty")
    n = len(points[0])
    base = points[0]
    diffs = [[a - b for a, b in zip(q, base)] for q in points[1:]]
    if len(points) < n + 1 or Matrix(diffs).rank() < n:
        raise NotFullDimensionalError(
            f"Newton polytope of {len(points)} points is not full-dimensional in R^{n}"
        )

    facets = set()
    for combo in itertools.combinations(points, n):
        normal = _hyperplane_normal(combo)
        if not any(normal):
            continue
        offset = sum(a * x for a, x in zip(normal, combo[0]))
        values = [sum(a * x for a, x in zip(normal, q)) for q in points]
        if all(v <= offset for v in values):
            facets.add(Facet(normal, offset))
        elif all(v >= offset for v in values):
            facets.add(Facet(tuple(-a for a in normal), -offset))

    facet_list = tuple(sorted(facets, key=lambda f: (f.normal, f.offset)))
    vertices = []
    for q in points:
        tight = [list(f.normal) for f in facet_list if f.value(q) == f.offset]
        if tight and Matrix(tight).rank() == n:
            vertices.append(q)
    logger.debug("Newton polytope: %d vertices, %d facets", len(vertices), len(facet_list))
    return Polytope(tuple(vertices), facet_list, n)


@dataclass(frozen=True)
class LatticePointSet:
    """Sorted, duplicate-free lattice points of (rho * interior) or B(rho * interior)."""

    points: Tuple[ExpVec, ...]
    kind: RegionKind
    polytope: Polytope
    rho: int

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[ExpVec]:
        return iter(self.points)

    def __contains__(self, point) -> bool:
        return tuple(point) in self._lookup

    @property
    def _lookup(self) -> frozenset:
        cached = self.__dict__.get("_lookup_cache")
        if cached is None:
            cached = frozenset(self.points)
            object.__setattr__(self, "_lookup_cache", cached)
        return cached

    def index(self, point: Sequence[int]) -> int:
        return self.points.index(tuple(point))


def _box(lo: Sequence[int], hi: Sequence[int]) -> Iterator[ExpVec]:
    return itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi)))


def dilated_interior_points(poly: Polytope, rho: int) -> LatticePointSet:
    """All lattice points k with <a, k> < rho*c for every facet (a, c)."""
    if rho < 1:
        raise ValueError("rho must be positive")
    lo = [rho * x for x in poly.min_coordinates()]
    hi = [rho * x for x in poly.max_coordinates()]
    points = tuple(k for k in _box(lo, hi) if poly.contains(k, rho, strict=True))
    return LatticePointSet(points, RegionKind.INTERIOR, poly, rho)


def box_closure_points(poly: Polytope, rho: int) -> LatticePointSet:
    """
    All lattice points of B(rho * interior) for a polytope in the non-negative orthant.

    Every such point lies in the box [0, rho*d_1 - 1] x ... x [0, rho*d_n - 1].
    """
    if rho < 1:
        raise ValueError("rho must be positive")
    if any(x < 0 for x in poly.min_coordinates()):
        raise PreconditionError("Box closures need a polytope in the non-negative orthant")
    hi = [rho * d - 1 for d in poly.max_coordinates()]
    points = tuple(y for y in _box([0] * poly.nvars, hi) if poly.in_box_closure(y, rho))
    return LatticePointSet(points, RegionKind.BOX_CLOSURE, poly, rho)


def region_contains(poly: Polytope, kind: RegionKind, point: Sequence, rho: int) -> bool:
    """Membership in rho * interior or in B(rho * interior)."""
    if kind is RegionKind.INTERIOR:
        return poly.contains(point, rho, strict=True)
    return poly.in_box_closure(point, rho)


def _random_weights(rng: random.Random, count: int, positive: bool) -> List[Fraction]:
    low = 1 if positive else 0
    weights = [rng.randint(low, 12) for _ in range(count)]
    if not any(weights):
        weights[rng.randrange(count)] = 1
    total = sum(weights)
    return [Fraction(w, total) for w in weights]


def _combination(poly: Polytope, weights: Sequence[Fraction]) -> RationalVector:
    return tuple(
        sum(w * v[i] for w, v in zip(weights, poly.vertices)) for i in range(poly.nvars)
    )


def _shrink(rng: random.Random, point: RationalVector) -> RationalVector:
    return tuple(x * Fraction(rng.randint(0, 10), 10) for x in point)


def minkowski_property_check(
    poly: Polytope,
    a: int,
    b: int,
    samples: int,
    kind: RegionKind = RegionKind.INTERIOR,
    seed: Optional[int] = 0,
) -> bool:
    """
    Sample x in a*mu and y in b*closure(mu) and check x + y in (a+b)*mu.

    mu is the interior of ``poly`` or its box closure, according to ``kind``.

    Raises:
        MinkowskiPropertyError: On the first counterexample
    """
    if a < 1 or b < 1:
        raise ValueError("a and b must be positive")
    rng = random.Random(seed)
    k = len(poly.vertices)
    centroid = _combination(poly, [Fraction(1, k)] * k)

    pairs = [(centroid, v) for v in poly.vertices]
    for _ in range(samples):
        x = _combination(poly, _random_weights(rng, k, positive=True))
        y = _combination(poly, _random_weights(rng, k, positive=False))
        if kind is RegionKind.BOX_CLOSURE:
            x, y = _shrink(rng, x), _shrink(rng, y)
        pairs.append((x, y))

    for x, y in pairs:
        total = tuple(a * xi + b * yi for xi, yi in zip(x, y))
        if not region_contains(poly, kind, total, a + b):
            raise MinkowskiPropertyError(
                f"{a}*x + {b}*y escapes {a + b}*mu for x={x}, y={y}", x=x, y=y
            )
    return True
