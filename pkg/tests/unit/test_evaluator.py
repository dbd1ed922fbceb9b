"""Tests for digit-by-digit scheme evaluation."""

from math import comb

import pytest

from plinear.engine import (
    EvaluationTrace,
    base_p_digits,
    eval_ct,
    eval_rat,
    eval_rat_diagonal,
    evaluate,
    parse_index,
)
from plinear.engine.sequences import APERY_DENOMINATOR, apery_numbers
from plinear.exceptions import IndexArityError
from plinear.rings import parse_poly
from plinear.schemes import build_rat_scheme


@pytest.mark.unit
class TestIndexHandling:
    """Test index parsing and digit expansion."""

    def test_digits(self):
        """Little-endian base-p digits; none for zero."""
        assert base_p_digits(0, 3) == []
        assert base_p_digits(4, 3) == [1, 1]
        assert base_p_digits(10, 2) == [0, 1, 0, 1]

    def test_parse_index(self):
        """Arbitrary-length decimal strings are accepted."""
        assert parse_index("12") == 12
        assert parse_index(7) == 7
        assert parse_index("9" * 60) == 10 ** 60 - 1

    def test_parse_index_rejects(self):
        """Negative or non-decimal indices are errors."""
        for bad in ("-1", "1e5", "abc", -3):
            with pytest.raises(ValueError):
                parse_index(bad)


@pytest.mark.unit
class TestEvalCT:
    """Test eval_ct against binomial coefficients."""

    def test_mod_p(self, scheme_mod3):
        """binom(2k, k) mod 3 for small k."""
        for k in range(40):
            assert eval_ct(scheme_mod3, k) == comb(2 * k, k) % 3

    def test_index_four(self, scheme_mod3):
        """binom(8, 4) = 70 = 1 mod 3."""
        assert eval_ct(scheme_mod3, 4).value == 1

    def test_mod_p_squared(self, scheme_mod9):
        """binom(2k, k) mod 9."""
        for k in range(60):
            assert eval_ct(scheme_mod9, k).value == comb(2 * k, k) % 9

    def test_empty_product(self, scheme_mod9):
        """N = 0 gives extraction . init."""
        assert eval_ct(scheme_mod9, 0).value == 1

    def test_huge_index(self, scheme_mod3):
        """binom(2N, N) mod 3 for N = 3^200 + 2 vanishes by its last digit."""
        N = 3 ** 200 + 2
        value = eval_ct(scheme_mod3, str(N))
        assert value.modulus.value == 3
        assert value == 0

    def test_trace(self, scheme_mod3):
        """The trace lists digits from the most significant one."""
        trace = EvaluationTrace()
        eval_ct(scheme_mod3, 5, trace)
        assert trace.digits == [1, 2]
        assert len(trace.vectors) == 2
        assert "digits" in trace.to_text()


@pytest.mark.unit
class TestEvalRat:
    """Test eval_rat against binomial coefficients and Apery numbers."""

    def test_diagonal_mod_p(self, diagonal_P):
        """binom(6, 3) = 20 = 0 mod 5."""
        scheme = build_rat_scheme(diagonal_P, 5, 1)
        assert eval_rat(scheme, (3, 3)).value == 0
        assert eval_rat(scheme, ["3", "1"]).value == 4

    def test_mod_p_squared(self, rat_scheme_mod9):
        """binom(i + j, i) mod 9 on a box."""
        for i in range(8):
            for j in range(8):
                assert eval_rat(rat_scheme_mod9, (i, j)).value == comb(i + j, i) % 9

    def test_origin(self, rat_scheme_mod9):
        """The empty digit product returns Q(0)/P(0)."""
        assert eval_rat(rat_scheme_mod9, (0, 0)).value == 1

    def test_non_unit_constant(self):
        """1/(2 - x) has coefficients 2^-(K+1)."""
        scheme = build_rat_scheme(parse_poly("2 - x", ["x"]), 3, 2)
        for K in range(12):
            assert eval_rat(scheme, (K,)).value == pow(2, -(K + 1), 9)

    def test_apery_diagonal(self):
        """The diagonal of 1/P_Apery gives the Apery numbers mod 5."""
        P = parse_poly(APERY_DENOMINATOR, ["x1", "x2", "x3", "x4"])
        scheme = build_rat_scheme(P, 5, 1)
        A = apery_numbers(7)
        for k in range(8):
            assert eval_rat_diagonal(scheme, k).value == A[k] % 5

    def test_arity(self, rat_scheme_mod9):
        """Index vectors must have one entry per variable."""
        with pytest.raises(IndexArityError):
            eval_rat(rat_scheme_mod9, (1, 2, 3))


@pytest.mark.unit
class TestEvaluateDispatch:
    """Test evaluate on both scheme kinds."""

    def test_ct(self, scheme_mod3):
        """Integers, strings and one-element lists are accepted."""
        assert evaluate(scheme_mod3, 4).value == 1
        assert evaluate(scheme_mod3, "4").value == 1
        assert evaluate(scheme_mod3, ["4"]).value == 1

    def test_ct_arity(self, scheme_mod3):
        """A constant-term scheme takes one index."""
        with pytest.raises(IndexArityError):
            evaluate(scheme_mod3, [1, 2])

    def test_rat(self, rat_scheme_mod9):
        """binom(5, 2) = 10 = 1 mod 9."""
        assert evaluate(rat_scheme_mod9, [2, 3]).value == 1
