"""Tests for engine settings and the error hierarchy."""
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import pytest
from pydantic import ValidationError

from hopfflow.config import Settings
from hopfflow.core.exceptions import (
    GraphValidationError, HopfflowError, InputFileError, TruncationError,
)


def fresh_settings(**overrides):
    return Settings(_env_file=None, **overrides)


class TestSettings:
    """Test defaults, environment overrides and validators."""

    def test_defaults(self):
        """Test the documented defaults."""
        settings = fresh_settings()
        assert settings.MAX_CLASSES == 1_000_000
        assert settings.PRIM_STEP_BUDGET == 1_000_000
        assert (settings.LAURENT_POLE_CAP, settings.LAURENT_REGULAR_CAP) == (16, 16)
        assert settings.TREE_LAMBDA_CONVENTION == "unit"
        assert settings.OUTPUT_FORMAT == "human"
        assert settings.LOG_LEVEL == "INFO"

    def test_environment_override(self, monkeypatch):
        """Test HOPFFLOW_* variables override the defaults."""
        monkeypatch.setenv("HOPFFLOW_MAX_CLASSES", "50")
        monkeypatch.setenv("HOPFFLOW_OUTPUT_FORMAT", "json")
        settings = fresh_settings()
        assert settings.MAX_CLASSES == 50
        assert settings.OUTPUT_FORMAT == "json"

    def test_log_level_normalized(self):
        """Test lowercase level names are accepted."""
        assert fresh_settings(LOG_LEVEL=" debug ").LOG_LEVEL == "DEBUG"

    def test_unknown_log_level(self):
        """Test unknown level names are rejected."""
        with pytest.raises(ValidationError):
            fresh_settings(LOG_LEVEL="chatty")

    def test_caps_both_zero(self):
        """Test the Laurent caps cannot both be zero."""
        with pytest.raises(ValidationError):
            fresh_settings(LAURENT_POLE_CAP=0, LAURENT_REGULAR_CAP=0)
        assert fresh_settings(LAURENT_POLE_CAP=0).LAURENT_REGULAR_CAP == 16

    @pytest.mark.parametrize("field,value", [
        ("MAX_CLASSES", 0), ("PRIM_STEP_BUDGET", -1), ("QUADRATURE_EPSREL", 0.0),
        ("FIT_CONDITION_LIMIT", 1.0), ("TREE_LAMBDA_CONVENTION", "half"),
    ])
    def test_out_of_range(self, field, value):
        """Test field constraints."""
        with pytest.raises(ValidationError):
            fresh_settings(**{field: value})


class TestExceptions:
    """Test the error hierarchy."""

    def test_detail_and_exit_code(self):
        """Test engine errors carry a detail and exit code 1."""
        error = TruncationError("outside the caps")
        assert isinstance(error, HopfflowError)
        assert isinstance(error, ArithmeticError)
        assert error.detail == "outside the caps"
        assert error.exit_code == 1

    def test_input_file_exit_code(self):
        """Test unreadable input maps to exit code 2."""
        assert InputFileError("missing").exit_code == 2

    def test_exit_code_override(self):
        """Test the exit code can be set per instance."""
        assert GraphValidationError("bad", exit_code=3).exit_code == 3
        assert isinstance(GraphValidationError("bad"), ValueError)
