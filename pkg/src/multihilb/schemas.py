"""JSON Schemas for the structured CLI outputs."""

_nat = {"type": "integer", "minimum": 0}
_nat_list = {"type": "array", "items": _nat}
_profile = {
    "type": "object",
    "patternProperties": {"^[1-9][0-9]*$": {"type": "integer", "minimum": 1}},
    "additionalProperties": False,
}

HF_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "multihilb hf --format json",
    "type": "object",
    "required": ["arity", "box", "point_count", "t", "stabilization_corner", "values"],
    "additionalProperties": False,
    "properties": {
        "arity": {"type": "integer", "minimum": 2},
        "box": _nat_list,
        "point_count": _nat,
        "t": _nat_list,
        "stabilization_corner": {"oneOf": [_nat_list, {"type": "null"}]},
        # nested arrays, one nesting level per axis, innermost entries are H values
        "values": {"type": "array", "items": {"anyOf": [_nat, {"$ref": "#/properties/values"}]}},
    },
}

LINES_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "multihilb lines --format json",
    "type": "object",
    "required": ["point_count", "t", "axes"],
    "additionalProperties": False,
    "properties": {
        "point_count": _nat,
        "t": _nat_list,
        "axes": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["axis", "corner_slice", "d_sequence", "hilbert", "geometric", "agree", "error"],
                "additionalProperties": False,
                "properties": {
                    "axis": _nat,
                    "corner_slice": _nat_list,
                    "d_sequence": {"type": "array", "items": {"type": "integer"}},
                    "hilbert": {"oneOf": [_profile, {"type": "null"}]},
                    "geometric": _profile,
                    "agree": {"type": "boolean"},
                    "error": {"type": ["string", "null"]},
                },
            },
        },
    },
}

VERIFY_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "multihilb verify --json",
    "type": "object",
    "required": ["passed", "point_count", "arity", "checks"],
    "additionalProperties": False,
    "properties": {
        "passed": {"type": "boolean"},
        "point_count": _nat,
        "arity": {"type": "integer", "minimum": 2},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "passed", "detail", "witness"],
                "additionalProperties": False,
                "properties": {
                    "name": {"type": "string"},
                    "passed": {"type": "boolean"},
                    "detail": {"type": "string"},
                    "witness": {"oneOf": [_nat_list, {"type": "string"}, {"type": "null"}]},
                },
            },
        },
    },
}
