"""Tests for the verification suites."""

import dataclasses
import random

import pytest

from plinear.config import Settings
from plinear.engine import (
    apery_numbers,
    apery_prime,
    eval_ct,
    eval_digit_scheme,
    eval_rat_diagonal,
    gessel_check,
    gessel_scheme_matrices,
    lucas_check,
    multilinear_lucas_check,
    power_of_two_check,
    two_state_power_check,
    verify_hasse_witt,
    verify_scheme,
)
from plinear.engine.sequences import APERY_DENOMINATOR, APERY_LAURENT
from plinear.exceptions import OracleCapExceededError, PreconditionError
from plinear.models import SequenceSpec
from plinear.rings import LaurentPoly, Modulus, Residue, TPoly, parse_poly
from plinear.schemes import build_ct_scheme, build_rat_scheme


def random_laurent(rng: random.Random, nvars: int) -> LaurentPoly:
    """Random g whose Newton polytope has the origin in its interior."""
    if nvars == 1:
        terms = {(-1,): rng.randint(1, 3), (1,): rng.randint(1, 3), (0,): rng.randint(0, 3)}
        extra = rng.choice([(2,), (-2,), None])
    else:
        terms = {
            (1, 0): rng.randint(1, 3),
            (0, 1): rng.randint(1, 3),
            (-1, -1): rng.randint(1, 3),
            (0, 0): rng.randint(0, 3),
        }
        extra = rng.choice([(1, 1), (-1, 0), None])
    if extra is not None:
        terms[extra] = 1
    return LaurentPoly(terms, nvars)


@pytest.mark.unit
class TestVerifyScheme:
    """Test scheme verification against exact oracles."""

    def test_ct_mod_p(self, scheme_mod3, settings):
        """Recursion checks for every k <= kmax and l < p, evaluation up to kmax*p + p - 1."""
        report = verify_scheme(scheme_mod3, 60, settings=settings)
        assert report.passed
        assert report.checked == 2 * 3 * 61

    def test_ct_mod_p_squared(self, scheme_mod9, settings):
        """Six-state scheme for binom(2k, k) mod 9."""
        assert verify_scheme(scheme_mod9, 40, settings=settings).passed

    def test_ct_with_numerator(self, settings):
        """ct[q g^k] with q supported inside Newton(g)."""
        g = parse_poly("x^2 + x + 1 + x^-1 + x^-2", ["x"])
        scheme = build_ct_scheme(g, 3, 2, q=parse_poly("x + 3", ["x"]))
        assert verify_scheme(scheme, 30, settings=settings).passed

    def test_ct_two_variables(self, settings):
        """Franel numbers (l = 3) mod 4."""
        g = parse_poly("(1+x)*(1+y)*(1+x^-1*y^-1)", ["x", "y"])
        scheme = build_ct_scheme(g, 2, 2, variables=["x", "y"])
        assert verify_scheme(scheme, 20, settings=settings).passed

    def test_corrupted_scheme_fails(self, scheme_mod3, settings):
        """A wrong matrix entry is detected."""
        broken = dataclasses.replace(scheme_mod3, matrix=((TPoly((1, 1), 3),),))
        report = verify_scheme(broken, 10, settings=settings)
        assert not report.passed
        assert report.failures

    def test_rat(self, rat_scheme_mod9, settings):
        """Every multi-index of [0, 6]^2."""
        report = verify_scheme(rat_scheme_mod9, 6, settings=settings)
        assert report.passed
        assert report.checked == 2 * 49

    def test_rat_non_unit_constant(self, settings):
        """P(0) = 2 is a unit mod 3."""
        scheme = build_rat_scheme(parse_poly("2 - x - y + x*y", ["x", "y"]), 3, 2)
        assert verify_scheme(scheme, 5, settings=settings).passed

    def test_rat_explicit_indices(self, settings):
        """Diagonal indices of the Apery denominator mod 5."""
        P = parse_poly(APERY_DENOMINATOR, ["x1", "x2", "x3", "x4"])
        scheme = build_rat_scheme(P, 5, 1)
        indices = [(k, k, k, k) for k in range(6)]
        assert verify_scheme(scheme, 0, indices=indices, settings=settings).passed

    def test_cap(self, scheme_mod3):
        """kmax beyond the oracle cap is refused."""
        with pytest.raises(OracleCapExceededError):
            verify_scheme(scheme_mod3, 100, settings=Settings(_env_file=None, ct_cap_low_dim=50))

    def test_digit_range_within_cap(self, scheme_mod3):
        """The largest checked index kmax*p + p - 1 must fit under the cap."""
        settings = Settings(_env_file=None, ct_cap_low_dim=50)
        with pytest.raises(OracleCapExceededError, match="62"):
            verify_scheme(scheme_mod3, 20, settings=settings)
        report = verify_scheme(scheme_mod3, 15, settings=settings)
        assert report.passed
        assert report.checked == 16 * 3 + 48


@pytest.mark.unit
class TestLucasCheck:
    """Test Lucas congruences modulo p."""

    @pytest.mark.parametrize(
        "spec, p, kmax",
        [
            (SequenceSpec(name="central-binomial"), 7, 300),
            (SequenceSpec(name="franel", parameter=3), 5, 300),
            (SequenceSpec(name="multinomial-square", parameter=3), 5, 200),
            (SequenceSpec(name="apery"), 11, 150),
            (SequenceSpec(name="custom-ct", poly="x + 2 + 1/x", variables=["x"]), 3, 60),
        ],
    )
    def test_catalogue(self, spec, p, kmax, settings):
        """Catalogue sequences satisfy the Lucas property."""
        assert lucas_check(spec, p, kmax, settings).passed

    def test_apery_prime_rejected(self, settings):
        """apery-prime is not an integer sequence."""
        with pytest.raises(PreconditionError):
            lucas_check(SequenceSpec(name="apery-prime"), 5, 10, settings)

    def test_composite_rejected(self, settings):
        """The modulus must be prime."""
        with pytest.raises(PreconditionError):
            lucas_check(SequenceSpec(name="central-binomial"), 6, 10, settings)


@pytest.mark.unit
class TestGessel:
    """Test the Apery congruence mod p^2 and its two-state scheme."""

    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_holds(self, p):
        """A_{kp+l} = A_l A_k + p A'_l k A_k mod p^2."""
        report = gessel_check(p, 30)
        assert report.passed
        assert report.checked == 2 * 31 * p

    def test_even_prime(self):
        """p = 2 is rejected."""
        with pytest.raises(PreconditionError):
            gessel_check(2, 10)


@pytest.mark.unit
class TestTwoStatePower:
    """Test the two-state scheme for 2^k."""

    @pytest.mark.parametrize("p", [3, 5, 7, 11])
    def test_holds(self, p):
        """Both congruences and digit evaluation."""
        assert two_state_power_check(p, 100).passed


@pytest.mark.unit
class TestHasseWittVerification:
    """Test F_u(t) = sum_v H_uv(t) F_v(t^p) mod p."""

    def test_single_point(self, central_g, settings):
        """Central binomials at p = 3."""
        assert verify_hasse_witt(central_g, 3, 50, settings).passed

    def test_three_points(self, settings):
        """Interior points -1, 0, 1."""
        g = parse_poly("x^2 + x + 1 + x^-1 + x^-2", ["x"])
        assert verify_hasse_witt(g, 5, 30, settings).passed

    def test_asymmetric(self, settings):
        """Orientation matters when Newton(g) is not symmetric."""
        g = parse_poly("x^2 + 3 + x^-1", ["x"])
        assert verify_hasse_witt(g, 3, 30, settings).passed


@pytest.mark.slow
class TestSlowSuites:
    """Larger instances."""

    def test_apery_ct_mod_p_squared(self, settings):
        """Constant-term scheme for the Apery numbers mod 25."""
        variables = ["x", "y", "z"]
        scheme = build_ct_scheme(parse_poly(APERY_LAURENT, variables), 5, 2, variables=variables)
        assert verify_scheme(scheme, 6, settings=settings).passed

    def test_gessel_large(self):
        """The suite defaults."""
        assert gessel_check(5, 100).passed

    def test_rat_three_variables(self, settings):
        """1/(1-x-y-z) mod 9 over [0, 4]^3."""
        scheme = build_rat_scheme(parse_poly("1 - x - y - z", ["x", "y", "z"]), 3, 2)
        assert verify_scheme(scheme, 4, settings=settings).passed


@pytest.mark.unit
class TestRandomSchemes:
    """Schemes for random g against the constant-term oracle."""

    @pytest.mark.parametrize("seed", range(4))
    def test_one_variable_mod_p_squared(self, seed, settings):
        """Random g in one variable, r = 2."""
        rng = random.Random(seed)
        g = random_laurent(rng, 1)
        scheme = build_ct_scheme(g, rng.choice([2, 3, 5]), 2)
        assert verify_scheme(scheme, 6, settings=settings).passed

    @pytest.mark.parametrize("seed", range(4))
    def test_two_variables_mod_p(self, seed, settings):
        """Random g in two variables, r = 1."""
        rng = random.Random(100 + seed)
        g = random_laurent(rng, 2)
        scheme = build_ct_scheme(g, rng.choice([2, 3, 5, 7]), 1)
        assert verify_scheme(scheme, 6, settings=settings).passed


@pytest.mark.unit
class TestPowerOfTwoScheme:
    """Test the r-state scheme for 2^k mod p^r."""

    @pytest.mark.parametrize("p, r", [(3, 1), (3, 3), (5, 2), (5, 3), (7, 4), (11, 2)])
    def test_holds(self, p, r):
        """Every digit recursion and evaluation up to kmax."""
        report = power_of_two_check(p, r, 60)
        assert report.passed
        assert report.checked == 61 * p + 61

    def test_even_prime(self):
        """p = 2 divides the base."""
        with pytest.raises(PreconditionError):
            power_of_two_check(2, 2, 10)


@pytest.mark.unit
class TestMultilinearLucas:
    """Test a_{pk+l} = a_l a_k mod p for 1/P with P multilinear and P(0) = 1."""

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_binomials(self, diagonal_P, p, settings):
        """1/(1-x-y) over [0, 20]^2."""
        report = multilinear_lucas_check(diagonal_P, p, 20, settings)
        assert report.passed
        assert report.checked == 21 * 21

    def test_apery_denominator(self, settings):
        """The four-variable denominator whose diagonal is A_k."""
        P = parse_poly(APERY_DENOMINATOR, ["x1", "x2", "x3", "x4"])
        assert multilinear_lucas_check(P, 3, 5, settings).passed

    def test_rejects_higher_degree(self, settings):
        """x^2 is not allowed."""
        with pytest.raises(PreconditionError, match="degree"):
            multilinear_lucas_check(parse_poly("1 - x^2 - y", ["x", "y"]), 3, 5, settings)

    def test_rejects_constant_term(self, settings):
        """P(0) must be 1."""
        with pytest.raises(PreconditionError, match="constant"):
            multilinear_lucas_check(parse_poly("2 - x - y", ["x", "y"]), 3, 5, settings)

    def test_cap(self, diagonal_P, settings):
        """The box is limited by the series oracle cap."""
        with pytest.raises(OracleCapExceededError):
            multilinear_lucas_check(diagonal_P, 3, 100, settings)


@pytest.mark.slow
class TestAperySchemes:
    """Apery numbers from both scheme constructions against the exact values."""

    @pytest.fixture(scope="class")
    def apery_ct_mod9(self):
        variables = ["x", "y", "z"]
        return build_ct_scheme(parse_poly(APERY_LAURENT, variables), 3, 2, variables=variables)

    def test_ct_matches_congruence(self, apery_ct_mod9):
        """eval_ct agrees with A_N and with (A_l + p k A'_l) A_k mod 9."""
        A = apery_numbers(40)
        ring = Modulus(3, 2)
        for N in range(41):
            k, ell = divmod(N, 3)
            a_prime = Residue.from_rational(apery_prime(ell), ring).value
            expected = (A[ell] + 3 * k * a_prime) * A[k] % 9
            got = eval_ct(apery_ct_mod9, N).value
            assert got == expected == A[N] % 9

    def test_hundred_digit_index(self, apery_ct_mod9):
        """A 100-digit index gives the same residue as the two-state scheme."""
        N = 10 ** 99 + 123456789
        got = eval_ct(apery_ct_mod9, N).value
        assert got == eval_ct(apery_ct_mod9, str(N)).value
        assert got == eval_digit_scheme(gessel_scheme_matrices(3), N).value

    def test_rat_diagonal_mod_p_squared(self):
        """The diagonal of 1/P for the four-variable denominator is A_k mod 25."""
        P = parse_poly(APERY_DENOMINATOR, ["x1", "x2", "x3", "x4"])
        scheme = build_rat_scheme(P, 5, 2)
        A = apery_numbers(30)
        for k in range(31):
            assert eval_rat_diagonal(scheme, k).value == A[k] % 25
