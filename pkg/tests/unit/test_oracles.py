"""Tests for the brute-force oracles."""

from fractions import Fraction
from math import comb

import pytest

from plinear.config import Settings
from plinear.engine import (
    constant_term_table,
    ct_oracle,
    series_inverse,
    series_oracle,
    state_vector_oracle,
)
from plinear.engine.sequences import APERY_LAURENT
from plinear.exceptions import OracleCapExceededError
from plinear.rings import LaurentPoly, parse_poly
from plinear.schemes import build_rat_scheme


@pytest.mark.unit
class TestConstantTermOracle:
    """Test ct[x^u q g^k]."""

    def test_central_binomial(self, central_g, settings):
        """ct[(x + 2 + 1/x)^3] = 20."""
        assert ct_oracle(central_g, None, (0,), 3, settings) == 20

    def test_apery(self, settings):
        """ct[g^2] = 73 for the Apery Laurent polynomial."""
        g = parse_poly(APERY_LAURENT, ["x", "y", "z"])
        assert ct_oracle(g, None, (0, 0, 0), 2, settings) == 73

    def test_franel(self, settings):
        """sum_m binom(2, m)^3 = 10."""
        g = parse_poly("(1+x)*(1+y)*(1+x^-1*y^-1)", ["x", "y"])
        assert ct_oracle(g, None, (0, 0), 2, settings) == 10

    def test_shifted_target(self, central_g):
        """ct[x g^k] is binom(2k, k-1)."""
        table = constant_term_table(central_g, [(1,), (0,)], 6)
        for k in range(7):
            assert table[k][(1,)] == (comb(2 * k, k - 1) if k else 0)
            assert table[k][(0,)] == comb(2 * k, k)

    def test_pruning_keeps_values(self, central_g):
        """Values agree with plain powering."""
        table = constant_term_table(central_g, [(0,)], 10, modulus=7)
        for k in range(11):
            assert table[k][(0,)] == central_g.pow(k).constant_term() % 7

    def test_origin_outside_polytope(self):
        """Without pruning the table is still exact."""
        g = parse_poly("x + x^2", ["x"])
        table = constant_term_table(g, [(-3,)], 3)
        assert table[2][(-3,)] == 2

    def test_cap(self, central_g):
        """The cap bounds the expansion."""
        with pytest.raises(OracleCapExceededError):
            ct_oracle(central_g, None, (0,), 6, Settings(_env_file=None, ct_cap_low_dim=5))


@pytest.mark.unit
class TestSeriesOracle:
    """Test power series coefficients of Q/P."""

    def test_binomial(self, diagonal_P, settings):
        """The coefficient of x^3 y^3 in 1/(1-x-y)."""
        assert series_oracle(diagonal_P, LaurentPoly.one(2), (3, 3), settings) == 20

    def test_rational_coefficients(self, settings):
        """1/(2 - x) has coefficient 1/16 at x^3."""
        P = parse_poly("2 - x", ["x"])
        assert series_oracle(P, LaurentPoly.one(1), (3,), settings) == Fraction(1, 16)
        assert series_oracle(P, LaurentPoly.constant(3, 1), (0,), settings) == Fraction(3, 2)

    def test_integer_inverse(self, diagonal_P):
        """P(0) = 1 keeps the inverse integral."""
        S = series_inverse(diagonal_P, (2, 2))
        assert S[(2, 2)] == 6
        assert all(isinstance(v, int) for v in S.values())

    def test_modular_inverse(self):
        """With a modulus the inverse lives in Z/m."""
        S = series_inverse(parse_poly("2 - x", ["x"]), (3,), modulus=9)
        assert S[(3,)] == pow(16, -1, 9)

    def test_cap(self, diagonal_P):
        """The series cap bounds the total degree."""
        with pytest.raises(OracleCapExceededError):
            series_oracle(diagonal_P, LaurentPoly.one(2), (5, 5), Settings(_env_file=None, series_cap=9))


@pytest.mark.unit
class TestStateVectorOracle:
    """Test exact state vectors."""

    def test_ct_initial(self, scheme_mod9, settings):
        """At k = 0 only the state (0, 0) is nonzero."""
        assert state_vector_oracle(scheme_mod9, 0, settings) == [0, 1, 0, 0, 0, 0]

    def test_ct_entries(self, scheme_mod9, settings):
        """Entry (l, u) at k is binom(rho+k-l-1, k-l) ct[x^u g^(k-l)]."""
        vector = state_vector_oracle(scheme_mod9, 2, settings)
        # (0, u): (k+1) ct[x^u g^2]; (1, u): k ct[x^u g]
        assert vector == [3 * 4, 3 * 6, 3 * 4, 2 * 1, 2 * 2, 2 * 1]

    def test_rat_initial(self, settings):
        """At the origin the vector is init over Q."""
        scheme = build_rat_scheme(parse_poly("2 - x", ["x"]), 3, 1)
        assert state_vector_oracle(scheme, (0,), settings) == [Fraction(1, 2)]
