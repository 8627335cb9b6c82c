"""Reads the JSON option schemas under biuniv/schemas."""

import json
import os


SCHEMA_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "schemas"))

# JSON type names of option fields
TYPE_MAP = {
    "str": str,
    "int": int,
    "float": float,
    "bool": bool,
    "list": list,
    "null": None
}


def _parse_field(field: dict, object_type: str) -> dict:
    """One field definition with its type resolved and the optional keys filled."""
    name = field.get("name")
    if not name:
        raise ValueError(f"Field without a name in schema '{object_type}'")

    type_name = field.get("type")
    if type_name not in TYPE_MAP:
        raise ValueError(f"Unknown type '{type_name}' for field '{name}'")

    parsed = {"default": None, "null": True}
    parsed.update(field)
    parsed["type"] = TYPE_MAP[type_name]
    return parsed


class SchemaLoader:
    """Loads option schemas: a JSON list of field definitions per object type."""

    def __init__(self, schema_dir=None):
        self.schema_dir = os.path.abspath(schema_dir) if schema_dir else SCHEMA_DIR

    def schema_path(self, object_type: str) -> str:
        return os.path.join(self.schema_dir, f"{object_type}.json")

    def load_schema(self, object_type):
        """
        Field definitions of object_type, types resolved to Python types

        Raises:
            FileNotFoundError: No schema file for object_type
            ValueError: A field is unnamed or names an unknown type
        """
        path = self.schema_path(object_type)
        if not os.path.isfile(path):
            raise FileNotFoundError(f"Schema for '{object_type}' not found: {path}")

        with open(path, encoding="utf-8") as handle:
            fields = json.load(handle)

        return [_parse_field(field, object_type) for field in fields]
