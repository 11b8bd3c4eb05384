"""Necklaces Package - Subsets, Necklace Multisets and the Maps Phi_S / Xi_S"""
from .maps import (
    NecklaceMultiset,
    SubsetS,
    all_subsets,
    multisets_of_weight,
    parse_necklaces,
    phi,
    phi_inv,
    word_of_inverse,
    xi,
    xi_inv,
)

__all__ = [
    "NecklaceMultiset",
    "SubsetS",
    "all_subsets",
    "multisets_of_weight",
    "parse_necklaces",
    "phi",
    "phi_inv",
    "word_of_inverse",
    "xi",
    "xi_inv",
]
