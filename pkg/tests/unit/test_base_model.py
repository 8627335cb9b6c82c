"""Tests for biuniv.base.base_model module."""

import pytest

from biuniv.base.base_model import BaseModel
from biuniv.helpers.error import ConfigurationError


class RunConfigSchemaModel(BaseModel):
    object_type = "run_config"


class TestBaseModelInit:

    def test_requires_object_type(self):
        with pytest.raises(ValueError, match="object_type"):
            BaseModel()

    def test_schema_loaded(self):
        model = RunConfigSchemaModel()
        assert "lambda" in model.schema_by_name


class TestValidateData:

    def test_defaults(self):
        result = RunConfigSchemaModel().validate_data({"command": "sweep"})
        assert result["output"] == "-"
        assert result["lambda"] is None

    def test_required_field(self):
        with pytest.raises(ConfigurationError, match="command is required"):
            RunConfigSchemaModel().validate_data({})

    def test_none_data(self):
        with pytest.raises(ConfigurationError, match="Data cannot be empty"):
            RunConfigSchemaModel().validate_data(None)

    def test_unknown_field(self):
        with pytest.raises(ConfigurationError, match="Unknown fields: colour"):
            RunConfigSchemaModel().validate_data({"command": "bounds", "colour": "red"})

    def test_allowed_values(self):
        with pytest.raises(ConfigurationError, match="command must be one of"):
            RunConfigSchemaModel().validate_data({"command": "plot"})

    def test_int_coerced_to_float(self):
        result = RunConfigSchemaModel().validate_data({"command": "bounds", "lambda": 1})
        assert isinstance(result["lambda"], float)

    def test_wrong_type(self):
        with pytest.raises(ConfigurationError, match="samples must be of type int"):
            RunConfigSchemaModel().validate_data({"command": "verify", "samples": 1.5})

    def test_bool_is_not_int(self):
        with pytest.raises(ConfigurationError, match="samples must be of type int"):
            RunConfigSchemaModel().validate_data({"command": "verify", "samples": True})

    def test_maximum(self):
        with pytest.raises(ConfigurationError, match="lambda must be <= 1.0"):
            RunConfigSchemaModel().validate_data({"command": "bounds", "lambda": 2.0})

    def test_exclusive_maximum(self):
        with pytest.raises(ConfigurationError, match="beta must be < 1.0"):
            RunConfigSchemaModel().validate_data({"command": "bounds", "beta": 1.0})

    def test_minimum(self):
        with pytest.raises(ConfigurationError, match="samples must be >= 1"):
            RunConfigSchemaModel().validate_data({"command": "verify", "samples": 0})

    def test_not_finite(self):
        with pytest.raises(ConfigurationError, match="resolution must be finite"):
            RunConfigSchemaModel().validate_data({"command": "verify", "resolution": float("nan")})
