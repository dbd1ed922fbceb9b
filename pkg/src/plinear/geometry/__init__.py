"""Exact lattice geometry: Newton polytopes and their lattice point sets."""

from plinear.geometry.inequalities import Inequality, eliminate, is_feasible
from plinear.geometry.polytope import (
    Facet,
    LatticePointSet,
    Polytope,
    RegionKind,
    box_closure_points,
    dilated_interior_points,
    membership,
    minkowski_property_check,
    newton_polytope,
    region_contains,
)

__all__ = [
    "Facet",
    "Inequality",
    "LatticePointSet",
    "Polytope",
    "RegionKind",
    "box_closure_points",
    "dilated_interior_points",
    "eliminate",
    "is_feasible",
    "membership",
    "minkowski_property_check",
    "newton_polytope",
    "region_contains",
]
