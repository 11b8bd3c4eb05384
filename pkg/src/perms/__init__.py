"""Perms Package - Permutations, Descent Sets and Comparison Maps"""
from .maps import (
    bona_map,
    costandard_permutation,
    foata_hat,
    foata_hat_inverse,
    left_to_right_minima,
    standard_permutation,
)
from .permutation import (
    BoundarySets,
    CycleForm,
    CyclePolicy,
    ParityClass,
    Permutation,
    all_permutations,
    boundary_sets,
    classify_parity,
    format_permutation,
    parse_permutation,
)

__all__ = [
    "BoundarySets",
    "CycleForm",
    "CyclePolicy",
    "ParityClass",
    "Permutation",
    "all_permutations",
    "bona_map",
    "boundary_sets",
    "classify_parity",
    "costandard_permutation",
    "foata_hat",
    "foata_hat_inverse",
    "format_permutation",
    "left_to_right_minima",
    "parse_permutation",
    "standard_permutation",
]
