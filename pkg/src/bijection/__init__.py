"""Bijection Package - Psi, Omega, Step Invariants and f_S"""
from .invariants import (
    assert_omega_step,
    assert_psi_step,
    check_omega_step,
    check_psi_step,
    check_step_inversion,
    check_trace,
)
from .parity import (
    BijectionTrace,
    PairState,
    Rule,
    TraceKind,
    TraceStep,
    WordClass,
    classify_word,
    extract_singleton,
    insert_singleton,
    omega,
    omega_step,
    omega_trace,
    psi,
    psi_step,
    psi_trace,
)
from .permutation_map import (
    FsComputation,
    f_s,
    f_s_inverse,
    f_s_inverse_trace,
    f_s_trace,
    hat_conjugate_psi,
)

__all__ = [
    "assert_omega_step",
    "assert_psi_step",
    "check_omega_step",
    "check_psi_step",
    "check_step_inversion",
    "check_trace",
    "BijectionTrace",
    "PairState",
    "Rule",
    "TraceKind",
    "TraceStep",
    "WordClass",
    "classify_word",
    "extract_singleton",
    "insert_singleton",
    "omega",
    "omega_step",
    "omega_trace",
    "psi",
    "psi_step",
    "psi_trace",
    "FsComputation",
    "f_s",
    "f_s_inverse",
    "f_s_inverse_trace",
    "f_s_trace",
    "hat_conjugate_psi",
]
