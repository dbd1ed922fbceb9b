"""Tests for scheme persistence."""

import dataclasses
import json

import pytest

from plinear.exceptions import ModulusOverflowError, SchemeFormatError, SchemeVersionError
from plinear.schemes import rat_digit_matrix
from plinear.storage import dumps_scheme, load_scheme, loads_scheme, save_scheme


@pytest.mark.unit
class TestSchemeRoundTrip:
    """Test save and load of both scheme kinds."""

    def test_ct_scheme(self, scheme_mod9, temp_dir):
        """A constant-term scheme survives a file round trip."""
        path = save_scheme(scheme_mod9, temp_dir / "binom.json")
        loaded = load_scheme(path)
        assert loaded == scheme_mod9
        assert loaded.variables == ("x",)

    def test_rat_scheme_keeps_memo(self, rat_scheme_mod9):
        """Memoized digit matrices are written and restored."""
        expected = rat_digit_matrix(rat_scheme_mod9, (2, 1))
        loaded = loads_scheme(dumps_scheme(rat_scheme_mod9))
        assert loaded == rat_scheme_mod9
        assert loaded.digit_matrices == {(2, 1): expected}
        assert rat_digit_matrix(loaded, (1, 1)) == rat_digit_matrix(rat_scheme_mod9, (1, 1))

    def test_deterministic(self, scheme_mod3):
        """Serialization is byte-for-byte stable."""
        assert dumps_scheme(scheme_mod3) == dumps_scheme(scheme_mod3)
        document = json.loads(dumps_scheme(scheme_mod3))
        assert document["format_version"] == 1
        assert document["kind"] == "ct"
        assert document["matrix"] == [[[1, 2]]]
        assert document["source"] == {"g": "x + 2 + x^-1", "q": "1", "vars": ["x"]}


@pytest.mark.unit
class TestSchemeValidation:
    """Test rejection of malformed scheme files."""

    @pytest.fixture
    def document(self, scheme_mod3) -> dict:
        """The JSON document of the one-state scheme."""
        return json.loads(dumps_scheme(scheme_mod3))

    def test_invalid_json(self):
        """Text that is not JSON."""
        with pytest.raises(SchemeFormatError):
            loads_scheme("{not json")

    def test_unsupported_version(self, document):
        """Future format versions are refused."""
        document["format_version"] = 2
        with pytest.raises(SchemeVersionError):
            loads_scheme(json.dumps(document))

    def test_residue_out_of_range(self, document):
        """Matrix entries must lie in [0, p^r)."""
        document["matrix"] = [[[9]]]
        with pytest.raises(SchemeFormatError):
            loads_scheme(json.dumps(document))

    def test_entry_too_long(self, document):
        """Matrix entries must have t-degree < p."""
        document["matrix"] = [[[1, 0, 0, 1]]]
        with pytest.raises(SchemeFormatError):
            loads_scheme(json.dumps(document))

    def test_modulus_mismatch(self, document):
        """The stored modulus must equal p^r."""
        document["modulus"] = 9
        with pytest.raises(SchemeFormatError):
            loads_scheme(json.dumps(document))

    def test_unknown_kind(self, document):
        """Only ct and rat schemes exist."""
        document["kind"] = "matrix"
        with pytest.raises(SchemeFormatError):
            loads_scheme(json.dumps(document))

    def test_unknown_field(self, document):
        """Extra fields are rejected."""
        document["comment"] = "hand edited"
        with pytest.raises(SchemeFormatError):
            loads_scheme(json.dumps(document))

    def test_bad_source(self, document):
        """Source polynomials must parse."""
        document["source"]["g"] = "x + + 1"
        with pytest.raises(SchemeFormatError):
            loads_scheme(json.dumps(document))

    def test_stored_modulus_overflow(self, document):
        """Moduli of 2^63 and above do not fit the format."""
        document["modulus"] = 2 ** 63
        with pytest.raises(ModulusOverflowError):
            loads_scheme(json.dumps(document))

    def test_writing_modulus_overflow(self, scheme_mod3):
        """2^63 cannot be written either."""
        huge = dataclasses.replace(scheme_mod3, p=2, r=63)
        with pytest.raises(ModulusOverflowError):
            dumps_scheme(huge)

    def test_missing_file(self, temp_dir):
        """Unreadable paths are format errors."""
        with pytest.raises(SchemeFormatError):
            load_scheme(temp_dir / "missing.json")


@pytest.mark.unit
class TestLoadedSchemeConsistency:
    """Test that loaded schemes agree with their source polynomials."""

    def test_composite_prime(self, scheme_mod3):
        """A well-formed file with p = 4 is refused."""
        document = json.loads(dumps_scheme(scheme_mod3))
        document.update(p=4, modulus=4)
        with pytest.raises(SchemeFormatError, match="prime"):
            loads_scheme(json.dumps(document))

    def test_states_not_from_g(self, scheme_mod3):
        """The single state of x + 2 + 1/x is (0, 0)."""
        document = json.loads(dumps_scheme(scheme_mod3))
        document["states"] = [[0, 1]]
        with pytest.raises(SchemeFormatError, match="states"):
            loads_scheme(json.dumps(document))

    def test_initial_vector(self, scheme_mod3):
        """init is the indicator of the state (0, 0)."""
        document = json.loads(dumps_scheme(scheme_mod3))
        document["init"] = [2]
        with pytest.raises(SchemeFormatError, match="initial"):
            loads_scheme(json.dumps(document))

    def test_rho_too_small(self, scheme_mod9):
        """rho = 2 does not reach precision 27 at p = 3."""
        document = json.loads(dumps_scheme(scheme_mod9))
        document.update(r=3, modulus=27)
        with pytest.raises(SchemeFormatError, match="rho"):
            loads_scheme(json.dumps(document))

    def test_rat_states_not_from_P(self, rat_scheme_mod9):
        """The box closure of 2 * interior(Newton(1 - x - y)) is {00, 01, 10}."""
        document = json.loads(dumps_scheme(rat_scheme_mod9))
        document["states"] = [[0, 0], [0, 1], [1, 1]]
        with pytest.raises(SchemeFormatError, match="states"):
            loads_scheme(json.dumps(document))
