"""Series Package - Truncated Polynomials and Generating Function Checks"""
from .identities import (
    IdentityReport,
    WordClassCounts,
    count_word_classes,
    even_lyndon_product,
    odd_lyndon_product,
    series_class_counts,
    verify_gf_identity,
    verify_parity_series,
    verify_substitution_symmetry,
)
from .polynomial import TruncatedPolynomial, linear_sum, product, truncated_product

__all__ = [
    "IdentityReport",
    "WordClassCounts",
    "count_word_classes",
    "even_lyndon_product",
    "odd_lyndon_product",
    "series_class_counts",
    "verify_gf_identity",
    "verify_parity_series",
    "verify_substitution_symmetry",
    "TruncatedPolynomial",
    "linear_sum",
    "product",
    "truncated_product",
]
