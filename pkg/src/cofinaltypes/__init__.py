"""Finite calculus of cofinal types of directed sets below aleph_omega.

Products of the basic directed sets 1, aleph_k, and [aleph_k]^{<aleph_m}
reduce to canonical forms that biject with good lattice paths; Tukey
comparability, Hasse diagrams, and the classification of covering intervals
all become finite computations on those paths.
"""

from .codec import decode, encode
from .dyck import (
    CoveringPair,
    DyckVector,
    catalan,
    covers,
    diagonal,
    enumerate_paths,
    is_valid,
    rank,
    render_steps,
    tukey_precedes,
)
from .intervals import (
    Decomposition,
    IntervalClassification,
    IntervalRow,
    classify,
    covering_pairs,
    decompose,
    interval_table,
)
from .order import (
    Characteristics,
    Comparison,
    TRIVIAL,
    UNKNOWN,
    characteristics,
    compare,
    oracle_compare,
    powerset_embed_check,
    product_characteristics,
)
from .typeexpr import (
    ONE,
    BasicFactor,
    Bracket,
    Omega,
    One,
    ParseError,
    ProductType,
    basic_leq,
    canonicalize,
    enumerate_types,
    factor_level,
    format_factor,
    format_type,
    is_canonical,
    is_trivial,
    level_factors,
    parse,
)

__all__ = [
    "BasicFactor",
    "Bracket",
    "Characteristics",
    "Comparison",
    "CoveringPair",
    "Decomposition",
    "DyckVector",
    "IntervalClassification",
    "IntervalRow",
    "ONE",
    "Omega",
    "One",
    "ParseError",
    "ProductType",
    "TRIVIAL",
    "UNKNOWN",
    "basic_leq",
    "canonicalize",
    "catalan",
    "characteristics",
    "classify",
    "compare",
    "covering_pairs",
    "covers",
    "decode",
    "decompose",
    "diagonal",
    "encode",
    "enumerate_paths",
    "enumerate_types",
    "factor_level",
    "format_factor",
    "format_type",
    "interval_table",
    "is_canonical",
    "is_trivial",
    "is_valid",
    "level_factors",
    "oracle_compare",
    "parse",
    "powerset_embed_check",
    "product_characteristics",
    "rank",
    "render_steps",
    "tukey_precedes",
]
