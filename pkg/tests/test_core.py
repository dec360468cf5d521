"""
Input validation, exit codes, settings and result schemas
"""
import logging
from fractions import Fraction

import pytest
from pydantic import ValidationError as PydanticValidationError

from braidtrace.core.config import Settings
from braidtrace.core.exceptions import (
    BraidSyntaxError,
    ConsistencyError,
    DenominatorError,
    SizeGuardError,
    UnsupportedTypeError,
    ValidationError,
    exit_code_for,
)
from braidtrace.core.logger import logger, set_level
from braidtrace.core.validators import input_validator
from braidtrace.coxeter.braids import BraidWord
from braidtrace.coxeter.systems import dihedral, type_a
from braidtrace.schemas.fourier import FourierTableFile
from braidtrace.schemas.results import CountReport


class TestInputValidator:
    """Test parsing of command-line values"""

    @pytest.mark.parametrize("text, expected", [
        ("A1", type_a(1)),
        ("a3", type_a(3)),
        ("A(8)", type_a(8)),
        ("I2(5)", dihedral(5)),
        ("i2(12)", dihedral(12)),
        ("BC2", dihedral(4)),
        ("B2", dihedral(4)),
        ("G2", dihedral(6)),
    ])
    def test_types(self, text, expected):
        assert input_validator.parse_type(text) == expected

    @pytest.mark.parametrize("text", ["A0", "A9", "E8", "I2(2)", "I2(13)", ""])
    def test_unsupported_types(self, text):
        with pytest.raises(UnsupportedTypeError):
            input_validator.parse_type(text)

    def test_braids(self, a2):
        assert input_validator.parse_braid("1 -2, 1", a2) == BraidWord((1, -2, 1))
        assert input_validator.parse_braid("", a2) == BraidWord(())
        with pytest.raises(BraidSyntaxError):
            input_validator.parse_braid("1 x", a2)
        with pytest.raises(BraidSyntaxError):
            input_validator.parse_braid("1 0", a2)
        with pytest.raises(BraidSyntaxError):
            input_validator.parse_braid("3", a2)

    def test_slopes(self):
        assert input_validator.parse_slope("3/2") == Fraction(3, 2)
        assert input_validator.parse_slope("-1/2") == Fraction(-1, 2)
        assert input_validator.parse_slope("2") == 2
        with pytest.raises(ValidationError):
            input_validator.parse_slope("1/0")
        with pytest.raises(ValidationError):
            input_validator.parse_slope("half")

    def test_primes(self):
        assert input_validator.parse_prime("5", 7) == 5
        with pytest.raises(ValidationError):
            input_validator.parse_prime("4")
        with pytest.raises(ValidationError):
            input_validator.parse_prime("11", 7)
        with pytest.raises(ValidationError):
            input_validator.parse_prime("q")


class TestExitCodes:
    """Test the mapping from exceptions to exit codes"""

    def test_input_errors(self):
        assert exit_code_for(ValidationError("bad")) == 2
        assert exit_code_for(SizeGuardError("too big")) == 2

    def test_consistency_errors(self):
        assert exit_code_for(ConsistencyError("broken")) == 3
        assert exit_code_for(DenominatorError("left over")) == 3
        assert exit_code_for(AssertionError()) == 3

    def test_unexpected_errors(self):
        assert exit_code_for(RuntimeError("boom")) == 1

    def test_details_are_kept(self):
        error = ValidationError("bad", {"q": 4})
        assert error.message == "bad"
        assert error.details == {"q": 4}


class TestSettings:
    """Test configuration from the environment"""

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv("BRAIDTRACE_LOG_LEVEL", "debug")
        monkeypatch.setenv("BRAIDTRACE_FF_MAX_Q", "5")
        config = Settings(_env_file=None)
        assert config.LOG_LEVEL == "DEBUG"
        assert config.FF_MAX_Q == 5

    def test_defaults(self, monkeypatch):
        monkeypatch.delenv("BRAIDTRACE_DATA_DIR", raising=False)
        config = Settings(_env_file=None)
        assert config.DATA_DIR is None
        assert config.FF_MAX_Q == 7

    def test_unknown_log_level(self):
        with pytest.raises(PydanticValidationError):
            Settings(_env_file=None, LOG_LEVEL="verbose")

    def test_limits_must_be_positive(self):
        with pytest.raises(PydanticValidationError):
            Settings(_env_file=None, MAX_GROUP_ORDER=0)

    def test_set_level(self):
        saved = logger.level
        try:
            set_level("debug")
            assert logger.level == logging.DEBUG
        finally:
            logger.setLevel(saved)


class TestSchemas:
    """Test validation of on-disk and reported data"""

    def _table(self, **overrides):
        data = {
            "type": "I2(4)",
            "labels": ["1", "delta", "phi_1", "epsdelta", "eps"],
            "families": [["1"], ["delta", "phi_1", "epsdelta"], ["eps"]],
            "entries": [["1" if i == j else "0" for j in range(5)] for i in range(5)],
        }
        data.update(overrides)
        return data

    def test_valid_table(self):
        table = FourierTableFile.model_validate(self._table())
        assert table.matrix()[0][0] == Fraction(1)

    @pytest.mark.parametrize("overrides", [
        {"labels": ["1", "1", "phi_1", "epsdelta", "eps"]},
        {"entries": [["1", "0"], ["0", "1"]]},
        {"entries": [["x"] * 5] * 5},
        {"families": [["1"], ["eps"]]},
    ])
    def test_invalid_tables(self, overrides):
        with pytest.raises(PydanticValidationError):
            FourierTableFile.model_validate(self._table(**overrides))

    def test_count_report_total(self):
        report = CountReport(group="SL2", q=3, braid=[1], fiber="unipotent", counts={"[1,1]": 0, "[2]": 24})
        assert report.total == 24
