"""Words Package - Alphabet, Orders and Lyndon Factorizations"""
from .core import (
    EMPTY_WORD,
    INFINITY,
    Alphabet,
    Comparand,
    Infinity,
    Ordering,
    WeightVector,
    Word,
    alt_lex_compare_periodic,
    canonical_rotation,
    concat,
    format_factors,
    format_word,
    is_primitive,
    lex_compare,
    lex_compare_periodic,
    parse_word,
    precedes,
    primitive_root_length,
    rotations,
    weight,
)
from .lyndon import (
    IsfDecomposition,
    LyndonFactorization,
    StandardFactorization,
    enumerate_lyndon_words,
    factor_starts_via_suffix_minima,
    factors_or_empty,
    is_even,
    is_lyndon,
    is_odd,
    isf,
    lyndon_factorize,
    smallest_proper_suffix,
    standard_factorization,
)

__all__ = [
    "EMPTY_WORD",
    "INFINITY",
    "Alphabet",
    "Comparand",
    "Infinity",
    "Ordering",
    "WeightVector",
    "Word",
    "alt_lex_compare_periodic",
    "canonical_rotation",
    "concat",
    "format_factors",
    "format_word",
    "is_primitive",
    "lex_compare",
    "lex_compare_periodic",
    "parse_word",
    "precedes",
    "primitive_root_length",
    "rotations",
    "weight",
    "IsfDecomposition",
    "LyndonFactorization",
    "StandardFactorization",
    "enumerate_lyndon_words",
    "factor_starts_via_suffix_minima",
    "factors_or_empty",
    "is_even",
    "is_lyndon",
    "is_odd",
    "isf",
    "lyndon_factorize",
    "smallest_proper_suffix",
    "standard_factorization",
]
