"""Base model class providing schema-driven validation of option records."""

import math

from biuniv.base.schema_loader import SchemaLoader
from biuniv.helpers.error import ConfigurationError


class BaseModel:
    """Base model class providing schema validation.

    Subclasses set object_type, the name of their schema file. validate_data
    checks every schema field for type, nullability, allowed values and
    numeric limits, and fills defaults for missing fields.
    """
    object_type = None  # Should be set in subclasses

    def __init__(self):
        if not self.object_type:
            raise ValueError("Subclasses must define object_type")

        self.schema = SchemaLoader().load_schema(self.object_type)
        self.schema_by_name = {field["name"]: field for field in self.schema}

    @staticmethod
    def _coerce(name, value, expected_type):
        if expected_type is float and isinstance(value, int) and not isinstance(value, bool):
            value = float(value)
        if expected_type is int and isinstance(value, bool):
            raise ConfigurationError(f"{name} must be of type int")
        if not isinstance(value, expected_type):
            raise ConfigurationError(f"{name} must be of type {expected_type.__name__}")
        if isinstance(value, float) and not math.isfinite(value):
            raise ConfigurationError(f"{name} must be finite")
        return value

    @staticmethod
    def _check_limits(field, value):
        name = field["name"]
        allowed = field.get("allowed_values")
        if allowed is not None and value not in allowed:
            raise ConfigurationError(f"{name} must be one of: {', '.join(map(str, allowed))}")

        if "minimum" in field and value < field["minimum"]:
            raise ConfigurationError(f"{name} must be >= {field['minimum']}, got {value}")
        if "maximum" in field and value > field["maximum"]:
            raise ConfigurationError(f"{name} must be <= {field['maximum']}, got {value}")
        if "exclusive_minimum" in field and value <= field["exclusive_minimum"]:
            raise ConfigurationError(f"{name} must be > {field['exclusive_minimum']}, got {value}")
        if "exclusive_maximum" in field and value >= field["exclusive_maximum"]:
            raise ConfigurationError(f"{name} must be < {field['exclusive_maximum']}, got {value}")

    def validate_data(self, data: dict) -> dict:
        """Validate and clean data based on the schema

        Raises:
            ConfigurationError: On an unknown field or any schema violation
        """
        if data is None:
            raise ConfigurationError("Data cannot be empty")

        unknown = sorted(set(data) - set(self.schema_by_name))
        if unknown:
            raise ConfigurationError(f"Unknown fields: {', '.join(unknown)}")

        result = {}
        for field in self.schema:
            name = field["name"]
            value = data.get(name)

            if value is None:
                if field["default"] is not None:
                    result[name] = field["default"]
                    continue
                if not field["null"]:
                    raise ConfigurationError(f"{name} is required")
                result[name] = None
                continue

            value = self._coerce(name, value, field["type"])
            self._check_limits(field, value)
            result[name] = value

        return result
