"""Linear, cyclic and skew cyclic codes over F4, R and the mixed alphabet F4R."""

from .analysis import (
    check_equivalence_theorems,
    component_codes,
    direct_product,
    dual,
    dual_by_enumeration,
    gray_image,
    inner_bits,
    is_dual_skew_cyclic,
    is_euclidean_self_orthogonal,
    is_self_orthogonal,
)
from .code import DEFAULT_ENUM_CAP, Code, Op, closure, is_closed_under, verified_flags
from .construct import (
    GeneratorSpec,
    build_from_spec,
    check_spec,
    combine_g,
    cyclic_code,
    normalize_ell,
    r_skew_cyclic_code,
    skew_cyclic_code,
)
from .distance import DistanceResult, enum_cap, min_distance
from .words import (
    Ambient,
    MixedWord,
    cyclic_shift,
    gray_map,
    inner_product,
    mixed_weight,
    polynomial_action,
    scalar_mul,
    skew_shift,
)

__all__ = [
    "Ambient",
    "Code",
    "DEFAULT_ENUM_CAP",
    "DistanceResult",
    "GeneratorSpec",
    "MixedWord",
    "Op",
    "build_from_spec",
    "check_equivalence_theorems",
    "check_spec",
    "closure",
    "combine_g",
    "component_codes",
    "cyclic_code",
    "cyclic_shift",
    "direct_product",
    "dual",
    "dual_by_enumeration",
    "enum_cap",
    "gray_image",
    "gray_map",
    "inner_bits",
    "inner_product",
    "is_closed_under",
    "is_dual_skew_cyclic",
    "is_euclidean_self_orthogonal",
    "is_self_orthogonal",
    "min_distance",
    "mixed_weight",
    "normalize_ell",
    "polynomial_action",
    "r_skew_cyclic_code",
    "scalar_mul",
    "skew_cyclic_code",
    "skew_shift",
    "verified_flags",
]
