"""schemas.py
This file is part of maxcomm
Licensed under MIT License

JSON schemas (Draft 2020-12) of the input documents
"""

__author__ = "maxcomm developers"
__copyright__ = "Copyright 2026, maxcomm developers"
__license__ = "MIT"
__maintainer__ = "maxcomm developers"

# JSON integers or exact rational strings such as "-3" and "3/2"
SCALAR = {
    "oneOf": [
        {"type": "integer"},
        {"type": "string", "pattern": r"^\s*[+-]?[0-9]+(\s*/\s*[0-9]+)?\s*$"},
    ]
}

MATRIX = {
    "type": "array",
    "minItems": 1,
    "items": {"type": "array", "minItems": 1, "items": {"$ref": "#/$defs/scalar"}},
}

FIELD = {"type": "string", "pattern": r"^\s*([Qq]|[Ff]_?[Pp]?\s*:?\s*[0-9]+)\s*$"}

_DEFS = {"scalar": SCALAR, "matrix": MATRIX, "field": FIELD}

_PRESENTATION = {
    "type": "object",
    "required": ["generators", "basis"],
    "properties": {
        "field": {"$ref": "#/$defs/field"},
        "generators": {"type": "array", "minItems": 1,
                       "items": {"type": "string", "pattern": "^[A-Za-z][A-Za-z0-9_]*$"}},
        "basis": {"type": "array", "minItems": 1, "items": {"type": "string"}},
        "rules": {"type": "object", "additionalProperties": {"type": "string"}},
    },
    "additionalProperties": False,
}

_CATALOG_REF = {
    "type": "object",
    "required": ["class"],
    "properties": {
        "field": {"$ref": "#/$defs/field"},
        "class": {"type": "integer"},
    },
    "additionalProperties": False,
}

_DEFS["presentation"] = _PRESENTATION
_DEFS["catalog_ref"] = _CATALOG_REF
_DEFS["algebra"] = {"oneOf": [{"$ref": "#/$defs/presentation"},
                              {"$ref": "#/$defs/catalog_ref"}]}

_DIALECT = "https://json-schema.org/draft/2020-12/schema"

MATRICES_SCHEMA = {
    "$schema": _DIALECT,
    "$defs": _DEFS,
    "type": "object",
    "required": ["matrices"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "field": {"$ref": "#/$defs/field"},
        "matrices": {"type": "array", "items": {"$ref": "#/$defs/matrix"}},
    },
    "additionalProperties": False,
}

ALGEBRA_SCHEMA = {
    "$schema": _DIALECT,
    "$defs": _DEFS,
    "$ref": "#/$defs/algebra",
}

REP_SCHEMA = {
    "$schema": _DIALECT,
    "$defs": _DEFS,
    "type": "object",
    "required": ["algebra"],
    "properties": {
        "field": {"$ref": "#/$defs/field"},
        "algebra": {"$ref": "#/$defs/algebra"},
        "n": {"type": "integer", "minimum": 1},
        "images": {"type": "array", "minItems": 1, "items": {"$ref": "#/$defs/matrix"}},
        "generators": {"type": "object", "minProperties": 1,
                       "additionalProperties": {"$ref": "#/$defs/matrix"}},
    },
    "oneOf": [{"required": ["images"]}, {"required": ["generators"]}],
    "additionalProperties": False,
}

TRIPLE_SCHEMA = {
    "$schema": _DIALECT,
    "$defs": _DEFS,
    "type": "object",
    "required": ["triple"],
    "properties": {
        "field": {"$ref": "#/$defs/field"},
        "triple": {"type": "array", "minItems": 3, "maxItems": 3,
                   "items": {"$ref": "#/$defs/matrix"}},
    },
    "additionalProperties": False,
}

SCHEMAS = {
    'matrices': MATRICES_SCHEMA,
    'algebra': ALGEBRA_SCHEMA,
    'rep': REP_SCHEMA,
    'triple': TRIPLE_SCHEMA,
}
