"""Codes over F4, over R = F4 + vF4 (v^2 = v), and over the mixed alphabet F4R."""

from __future__ import annotations

from .algebra import F4, crt_compose, crt_decompose, eta, gray_star, lee_weight, theta
from .codes import Ambient, Code, GeneratorSpec, MixedWord, Op, build_from_spec, closure
from .codes import dual, gray_image, min_distance
from .errors import BudgetExceeded, F4RError, ParseError, PreconditionError, VerificationError
from .kernels import BACKEND
from .skewpoly import SkewPoly, format_poly, parse_poly

__version__ = "0.1.0"

__all__ = [
    "Ambient",
    "BACKEND",
    "BudgetExceeded",
    "Code",
    "F4",
    "F4RError",
    "GeneratorSpec",
    "MixedWord",
    "Op",
    "ParseError",
    "PreconditionError",
    "SkewPoly",
    "VerificationError",
    "build_from_spec",
    "closure",
    "crt_compose",
    "crt_decompose",
    "dual",
    "eta",
    "format_poly",
    "gray_image",
    "gray_star",
    "lee_weight",
    "min_distance",
    "parse_poly",
    "theta",
]
