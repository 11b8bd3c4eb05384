"""Harness Package - Exhaustive Counting and Bijectivity Sweeps"""
from .bijectivity import (
    SweepReport,
    verify_bona_bijection,
    verify_fs_bijectivity,
    verify_hat_conjugation,
    verify_necklace_counts,
    verify_necklace_roundtrips,
)
from .counts import (
    CountReport,
    closed_form_total,
    subset_mobius,
    subset_zeta,
    verify_theorem_counts,
)

__all__ = [
    "SweepReport",
    "verify_bona_bijection",
    "verify_fs_bijectivity",
    "verify_hat_conjugation",
    "verify_necklace_counts",
    "verify_necklace_roundtrips",
    "CountReport",
    "closed_form_total",
    "subset_mobius",
    "subset_zeta",
    "verify_theorem_counts",
]
