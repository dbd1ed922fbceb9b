"""Tests for Newton polytopes, lattice points and the Minkowski property."""

from fractions import Fraction

import pytest

from plinear.exceptions import NotFullDimensionalError, PreconditionError
from plinear.geometry import (
    Facet,
    Inequality,
    RegionKind,
    box_closure_points,
    dilated_interior_points,
    is_feasible,
    membership,
    minkowski_property_check,
    newton_polytope,
)

TRIANGLE = [(0, 0), (1, 0), (0, 1)]
SEGMENT = [(-1,), (0,), (1,)]


@pytest.mark.unit
class TestNewtonPolytope:
    """Test convex hull construction."""

    def test_segment(self):
        """[-1, 1] has two facets and two vertices; 0 is not a vertex."""
        poly = newton_polytope(SEGMENT)
        assert poly.vertices == ((-1,), (1,))
        assert poly.facets == (Facet((-1,), 1), Facet((1,), 1))

    def test_triangle_facets(self):
        """Normals are primitive and outward."""
        poly = newton_polytope(TRIANGLE)
        assert poly.facets == (Facet((-1, 0), 0), Facet((0, -1), 0), Facet((1, 1), 1))
        assert poly.vertices == ((0, 0), (0, 1), (1, 0))

    def test_square_with_interior_support(self):
        """Support points inside the hull are not vertices."""
        support = [(a, b) for a in range(3) for b in range(3)]
        poly = newton_polytope(support)
        assert poly.vertices == ((0, 0), (0, 2), (2, 0), (2, 2))
        assert len(poly.facets) == 4

    def test_scaled_triangle_primitive_normals(self):
        """Normals through lattice points at distance 2 are still reduced."""
        poly = newton_polytope([(0, 0), (2, 0), (0, 2)])
        assert poly.facets == (Facet((-1, 0), 0), Facet((0, -1), 0), Facet((1, 1), 2))

    def test_tetrahedron(self):
        """Facets of the standard simplex in R^3."""
        poly = newton_polytope([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
        assert poly.facets == (
            Facet((-1, 0, 0), 0),
            Facet((0, -1, 0), 0),
            Facet((0, 0, -1), 0),
            Facet((1, 1, 1), 1),
        )
        assert len(poly.vertices) == 4

    def test_coplanar_points_skipped(self):
        """Degenerate point triples in R^3 contribute no facet."""
        support = [(0, 0, 0), (1, 0, 0), (2, 0, 0), (0, 1, 0), (0, 0, 1)]
        poly = newton_polytope(support)
        assert len(poly.facets) == 4
        assert (1, 0, 0) not in poly.vertices

    def test_not_full_dimensional(self):
        """Collinear support has empty interior."""
        with pytest.raises(NotFullDimensionalError):
            newton_polytope([(0, 0), (1, 1), (2, 2)])
        with pytest.raises(NotFullDimensionalError):
            newton_polytope([(0, 0)])

    def test_membership(self):
        """Strict membership excludes the boundary."""
        poly = newton_polytope(TRIANGLE)
        assert membership(poly, (Fraction(1, 2), Fraction(1, 4)))
        assert not membership(poly, (1, 0))
        assert membership(poly, (1, 0), strict=False)
        assert membership(poly, (1, 1), rho=3)


@pytest.mark.unit
class TestLatticePoints:
    """Test enumeration of state regions."""

    def test_interior_dilation(self):
        """Interior lattice points of rho * [-1, 1]."""
        poly = newton_polytope(SEGMENT)
        assert dilated_interior_points(poly, 1).points == ((0,),)
        assert dilated_interior_points(poly, 2).points == ((-1,), (0,), (1,))

    def test_triangle_interior(self):
        """2 * triangle has no interior lattice point; 3 * triangle has one."""
        poly = newton_polytope(TRIANGLE)
        assert len(dilated_interior_points(poly, 2)) == 0
        assert dilated_interior_points(poly, 3).points == ((1, 1),)

    def test_box_closure(self):
        """Box closures of the dilated open triangle."""
        poly = newton_polytope(TRIANGLE)
        assert box_closure_points(poly, 1).points == ((0, 0),)
        assert box_closure_points(poly, 2).points == ((0, 0), (0, 1), (1, 0))

    def test_box_closure_segment(self):
        """B(3 * (0, 1)) = {0, 1, 2}."""
        poly = newton_polytope([(0,), (1,)])
        points = box_closure_points(poly, 3)
        assert points.points == ((0,), (1,), (2,))
        assert (1,) in points
        assert points.index((2,)) == 2

    def test_box_closure_needs_orthant(self):
        """Polytopes with negative coordinates have no box closure."""
        with pytest.raises(PreconditionError):
            box_closure_points(newton_polytope(SEGMENT), 1)


@pytest.mark.unit
class TestMinkowskiProperty:
    """Test the sampled property a*mu + b*closure(mu) in (a+b)*mu."""

    def test_interior(self):
        """Open segment."""
        poly = newton_polytope(SEGMENT)
        assert minkowski_property_check(poly, 1, 1, samples=20)

    def test_box_closure(self):
        """Box closure of the open triangle."""
        poly = newton_polytope(TRIANGLE)
        assert minkowski_property_check(poly, 1, 2, samples=20, kind=RegionKind.BOX_CLOSURE)

    def test_invalid_scales(self):
        """a and b must be positive."""
        with pytest.raises(ValueError):
            minkowski_property_check(newton_polytope(SEGMENT), 0, 1, samples=1)


@pytest.mark.unit
class TestFourierMotzkin:
    """Test exact feasibility of mixed strict and weak systems."""

    def test_open_interval(self):
        """0 < z < 1 is feasible; 0 < z < 0 is not."""
        assert is_feasible([Inequality.make([-1], 0, True), Inequality.make([1], 1, True)])
        assert not is_feasible([Inequality.make([-1], 0, True), Inequality.make([1], 0, True)])

    def test_weak_boundary(self):
        """0 <= z <= 0 is feasible."""
        assert is_feasible([Inequality.make([-1], 0, False), Inequality.make([1], 0, False)])

    def test_two_variables(self):
        """z1 + z2 < 2 with z1 >= 1 and z2 >= 1 is infeasible."""
        system = [
            Inequality.make([1, 1], 2, True),
            Inequality.make([-1, 0], -1, False),
            Inequality.make([0, -1], -1, False),
        ]
        assert not is_feasible(system)
