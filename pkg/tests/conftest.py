"""Pytest configuration and fixtures."""

import tempfile
from pathlib import Path
from typing import Generator

import pytest

from plinear.config import Settings
from plinear.rings import LaurentPoly, parse_poly
from plinear.schemes import build_ct_scheme, build_rat_scheme


@pytest.fixture
def temp_dir() -> Generator[Path, None, None]:
    """Create a temporary directory for scheme and report files."""
    with tempfile.TemporaryDirectory() as tmp:
        yield Path(tmp)


@pytest.fixture
def settings() -> Settings:
    """Settings with the documented defaults, independent of the environment."""
    return Settings(_env_file=None)


@pytest.fixture
def central_g() -> LaurentPoly:
    """g = x + 2 + 1/x, so that ct[g^k] = binom(2k, k)."""
    return parse_poly("x + 2 + 1/x", ["x"])


@pytest.fixture
def diagonal_P() -> LaurentPoly:
    """P = 1 - x - y; the coefficient of x^i y^j in 1/P is binom(i+j, i)."""
    return parse_poly("1 - x - y", ["x", "y"])


@pytest.fixture
def scheme_mod3(central_g):
    """One-state scheme for binom(2k, k) mod 3."""
    return build_ct_scheme(central_g, 3, 1, variables=["x"])


@pytest.fixture
def scheme_mod9(central_g):
    """Six-state scheme for binom(2k, k) mod 9."""
    return build_ct_scheme(central_g, 3, 2, variables=["x"])


@pytest.fixture
def rat_scheme_mod9(diagonal_P):
    """Three-state scheme for the coefficients of 1/(1-x-y) mod 9."""
    return build_rat_scheme(diagonal_P, 3, 2, variables=["x", "y"])
