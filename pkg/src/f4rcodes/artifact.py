"""JSON code descriptors and code artifacts.

A descriptor names generators::

    {"alpha": 4, "beta": 6, "f": "X^3 + X^2 + X + 1", "ell": "0",
     "g1": "w + w^2 X + w^2 X^2 + X^3", "g2": "w + w^2 X + w^2 X^2 + X^3",
     "generators": ["1f"], "options": {"seed": 0, "cap": 16777216}}

``kind`` selects the family: ``"f4r"`` (default, the fields above),
``"f4_cyclic"`` or ``"f4_skew"`` (fields ``n`` and ``g``).  An artifact
stores the canonical basis as hex words plus the verified closure flags.
"""

from __future__ import annotations

import json
from typing import Any

from .codes.code import Code, Op, closure
from .codes.construct import GeneratorSpec, build_from_spec, cyclic_code, skew_cyclic_code
from .codes.words import Ambient
from .errors import ParseError, PreconditionError
from .skewpoly import SkewPoly, parse_poly

__all__ = [
    "ARTIFACT_FORMAT",
    "KINDS",
    "load_json",
    "build_descriptor",
    "code_to_artifact",
    "artifact_to_code",
    "dumps",
]

ARTIFACT_FORMAT = "f4rcodes-code/1"
KINDS = ("f4r", "f4_cyclic", "f4_skew")

_SHIFT_OPS = {
    "f4r": (Op.R_SCALARS, Op.SKEW_SHIFT),
    "f4_cyclic": (Op.F4_SCALARS, Op.CYCLIC_SHIFT),
    "f4_skew": (Op.F4_SCALARS, Op.FROBENIUS_SHIFT),
}


def dumps(obj: Any) -> str:
    """Deterministic JSON text (sorted keys, fixed indentation, trailing newline)."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def load_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from None
    if not isinstance(data, dict):
        raise ParseError(f"{path}: expected a JSON object")
    return data


def _int(d: dict, key: str, default: int | None = None) -> int:
    val = d.get(key, default)
    if not isinstance(val, int) or isinstance(val, bool) or val < 0:
        raise ParseError(f"field {key!r} must be a non-negative integer")
    return val


def _poly(d: dict, key: str) -> SkewPoly:
    text = d.get(key, "0")
    if not isinstance(text, str):
        raise ParseError(f"field {key!r} must be a polynomial string")
    return parse_poly(text)


def _hex_words(d: dict, amb: Ambient) -> list[int]:
    words = []
    for text in d.get("generators", []):
        try:
            x = int(text, 16)
        except (TypeError, ValueError):
            raise ParseError(f"generator {text!r} is not a hex word") from None
        if x >> amb.nbits:
            raise ParseError(f"generator {text!r} exceeds {amb.nbits} bits")
        words.append(x)
    return words


def options(d: dict) -> dict:
    opts = d.get("options", {})
    if not isinstance(opts, dict):
        raise ParseError("options must be an object")
    for key in ("cap", "seed"):
        if key in opts:
            _int(opts, key)
    if opts.get("cap", 1) < 1:
        raise ParseError("cap must be positive")
    return opts


def build_descriptor(d: dict) -> tuple[Code, str]:
    """Build the code a descriptor names; returns the code and its kind."""
    kind = d.get("kind", "f4r")
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}")
    options(d)
    if kind == "f4r":
        try:
            amb = Ambient(_int(d, "alpha", 0), _int(d, "beta", 0))
        except ValueError as exc:
            raise ParseError(str(exc)) from None
        spec = GeneratorSpec(_poly(d, "f"), _poly(d, "ell"), _poly(d, "g1"), _poly(d, "g2"))
        code = build_from_spec(spec, amb)
    else:
        n = _int(d, "n")
        if n < 1:
            raise ParseError("n must be positive")
        g = _poly(d, "g")
        if g.is_zero():
            raise PreconditionError("g must be nonzero")
        code = (cyclic_code if kind == "f4_cyclic" else skew_cyclic_code)(g, n)
        amb = code.ambient
    extra = _hex_words(d, amb)
    if extra:
        code = closure(amb, list(code.basis) + extra, _SHIFT_OPS[kind])
    return code, kind


def code_to_artifact(code: Code, kind: str = "f4r", extra: dict | None = None) -> dict:
    amb = code.ambient
    art = {
        "format": ARTIFACT_FORMAT,
        "kind": kind,
        "alpha": amb.alpha,
        "beta": amb.beta,
        "log2_size": code.log2_size,
        "basis": [format(x, "x") for x in code.basis],
        "closure_flags": sorted(code.closure_flags),
    }
    if extra:
        art.update(extra)
    return art


def artifact_to_code(art: dict) -> tuple[Code, str]:
    if art.get("format") != ARTIFACT_FORMAT:
        raise ParseError(f"not a code artifact (format {art.get('format')!r})")
    kind = art.get("kind", "f4r")
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}")
    try:
        amb = Ambient(_int(art, "alpha"), _int(art, "beta"))
        rows = [int(h, 16) for h in art["basis"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed artifact: {exc}") from None
    if any(x >> amb.nbits for x in rows):
        raise ParseError("basis word wider than the ambient")
    code = Code.from_rows(amb, rows, art.get("closure_flags", ()))
    if code.log2_size != len(rows):
        raise ParseError("artifact basis is not linearly independent")
    return code, kind
