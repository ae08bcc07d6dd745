"""JSON schemas for command-line output (draft 2020-12)."""

from __future__ import annotations

_NUM = {"type": ["number", "null"]}
_STR = {"type": "string"}

VERDICT = {
    "type": "object",
    "required": ["kind", "N", "l", "witness", "value", "reason"],
    "properties": {
        "kind": {"enum": ["PositiveRootOfUnity", "PositiveReal", "Negative", "Indeterminate"]},
        "N": {"type": ["integer", "null"]},
        "l": {"type": ["integer", "null"]},
        "witness": {"type": ["string", "null"]},
        "value": _NUM,
        "reason": _STR,
    },
}

POINT = {
    "type": "object",
    "required": ["q_re", "q_im", "r_re", "r_im"],
    "properties": {k: {"type": "number"} for k in ("q_re", "q_im", "r_re", "r_im")},
}

SCAN_ROW = {
    "type": "object",
    "required": ["q_re", "q_im", "r_re", "r_im", "delta", "gamma", "verdict", "witness", "trace_value"],
    "properties": {
        **POINT["properties"],
        "delta": _NUM,
        "gamma": _NUM,
        "verdict": VERDICT["properties"]["kind"],
        "witness": _STR,
        "trace_value": _NUM,
    },
}

_POLY_ENTRY = {
    "type": "object",
    "required": ["name", "coefficients", "real_root_intervals", "roots_above_2"],
    "properties": {
        "name": _STR,
        "coefficients": {"type": "array", "items": _STR},
        "real_root_intervals": {"type": "array", "items": {"type": "array", "items": _STR,
                                                             "minItems": 2, "maxItems": 2}},
        "real_roots_approx": {"type": "array", "items": {"type": "number"}},
        "roots_in_window": {"type": "integer"},
        "roots_above_2": {"type": "integer"},
        "matches_stated_form": {"type": "boolean"},
    },
}

SCHEMAS: dict[str, dict] = {
    "homfly": {
        "type": "object",
        "required": ["entries"],
        "properties": {"entries": {"type": "array", "items": {
            "type": "object",
            "required": ["name", "strands", "braid", "writhe", "normalized", "value"],
            "properties": {"name": _STR, "strands": {"type": "integer"}, "braid": _STR,
                           "writhe": {"type": "integer"}, "normalized": {"type": "boolean"},
                           "method": _STR, "value": _STR},
        }}},
    },
    "jones": {
        "type": "object",
        "required": ["braid", "strands", "calibration", "value"],
        "properties": {"braid": _STR, "strands": {"type": "integer"}, "calibration": _STR, "value": _STR},
    },
    "qtrace": {
        "type": "object",
        "required": ["diagram", "value"],
        "properties": {"diagram": _STR, "value": {"type": ["string", "number"]},
                       "sign": {"type": "integer"}, "imag": {"type": "number"}},
    },
    "jw": {
        "type": "object",
        "required": ["n", "loop", "terms"],
        "properties": {"n": {"type": "integer"}, "loop": _STR, "trace": _STR,
                       "terms": {"type": "array", "items": {
                           "type": "object", "required": ["matching", "coefficient"],
                           "properties": {"matching": _STR, "coefficient": _STR}}}},
    },
    "idem3": {
        "type": "object",
        "required": ["ok", "residuals", "trace_P", "trace_Q", "threebox"],
        "properties": {"ok": {"type": "boolean"},
                       "residuals": {"type": "object", "additionalProperties": _STR},
                       "literal_residuals": {"type": "object", "additionalProperties": _STR},
                       "trace_P": _STR, "trace_Q": _STR,
                       "threebox": {"type": "object", "additionalProperties": {"type": "boolean"}}},
    },
    "relations": {
        "type": "object",
        "required": ["omega", "a", "a_prime", "coefficients", "capping_ok"],
        "properties": {"omega": _STR, "a": {"type": "integer"}, "a_prime": {"type": "integer"},
                       "coefficients": {"type": "object", "additionalProperties": _STR},
                       "capping_ok": {"type": "boolean"},
                       "capping_residuals": {"type": "object", "additionalProperties": _STR}},
    },
    "exclusions": {
        "type": "object",
        "required": ["branches"],
        "properties": {"branches": {"type": "array", "items": {
            "type": "object",
            "required": ["branch", "claim", "polynomials", "verdict", "excluded"],
            "properties": {"branch": _STR, "claim": _STR, "verdict": _STR, "excluded": {"type": "boolean"},
                           "polynomials": {"type": "array", "items": _POLY_ENTRY}},
        }}},
    },
    "classify": {
        "type": "object",
        "required": ["point", "verdict"],
        "properties": {"point": {"type": "object"}, "delta": _NUM, "gamma": _NUM, "verdict": VERDICT},
    },
    "solve-params": {
        "type": "object",
        "required": ["delta", "gamma", "solutions"],
        "properties": {"delta": {"type": "number"}, "gamma": {"type": "number"},
                       "solutions": {"type": "array", "items": {
                           "type": "object",
                           "required": [*POINT["required"], "gamma_matches", "residual"],
                           "properties": {**POINT["properties"], "gamma_matches": {"type": "boolean"},
                                          "residual": {"type": "number"}}}}},
    },
    "orbit": {
        "type": "object",
        "required": ["points"],
        "properties": {"points": {"type": "array", "items": {
            "type": "object", "required": [*POINT["required"], "transposes"],
            "properties": {**POINT["properties"], "transposes": {"type": "boolean"}}}}},
    },
    "scan": {
        "type": "object",
        "required": ["rows"],
        "properties": {"rows": {"type": "array", "items": SCAN_ROW}},
    },
}
