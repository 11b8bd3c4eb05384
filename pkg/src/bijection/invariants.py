"""
Step Invariants
===============
Per-step properties of Psi and Omega, checked on (before, step) pairs.

``check_*`` functions return a list of violation messages; ``assert_*``
raise InvariantViolation listing them. Step inversion
replays a step through the opposite dispatcher and expects the primed
(or unprimed) counterpart rule to restore the previous state.
"""

import logging
from typing import List

from ..errors import InvariantViolation
from ..words.core import INFINITY, Comparand, Word, format_word, precedes
from ..words.lyndon import (
    IsfDecomposition,
    StandardFactorization,
    is_even,
    is_odd,
    standard_factorization,
)
from .parity import (
    BijectionTrace,
    PairState,
    Rule,
    TraceKind,
    TraceStep,
    omega_step,
    psi_step,
)


logger = logging.getLogger(__name__)


def _at(factors, index: int) -> Comparand:
    """1-based factor access with o_i = INFINITY for i <= 0."""
    return factors[index - 1] if index >= 1 else INFINITY


def _odd_distinct(factors) -> bool:
    return all(is_odd(f) for f in factors) and len(set(factors)) == len(factors)


def _le(u: Comparand, v: Comparand) -> bool:
    return not precedes(v, u)


def _show(word: Comparand) -> str:
    return format_word(word)


# ═══════════════════════════════════════════════════════════════════════════
#                              PSI STEPS
# ═══════════════════════════════════════════════════════════════════════════

def check_psi_step(before: PairState, step: TraceStep) -> List[str]:
    """Properties of a (psi) step (O, E) -> (O', E')."""
    problems: List[str] = []
    rule, after = step.rule, step.state
    o = before.o_factors
    o_new = after.o_factors
    e_new = after.e_factors
    h = len(o_new)

    removed = len(before.O) - len(after.O)
    if removed <= 0 or removed % 2:
        problems.append(f"|O| dropped by {removed}, expected a positive even amount")

    # factorization shape of O'
    if not _odd_distinct(o_new):
        problems.append(f"O'={_show(after.O)} has even or repeated factors")
    if rule is Rule.F:
        expected = o[:-2]
        moved: Word = o[-1] + o[-2]
    else:
        split = step.detail
        if not isinstance(split, StandardFactorization):
            return problems + [f"rule {rule.value} carries no standard factorization"]
        kept = split.r if rule is Rule.S else split.s
        expected = o[:-1] + (kept,)
        moved = split.s if rule is Rule.S else split.r
    if o_new != tuple(expected):
        problems.append(f"O' factors {[_show(f) for f in o_new]} differ from the rule's shape")

    if not precedes(after.E, _at(o_new, h - 1)):
        problems.append(f"E'={_show(after.E)} is not below o'_(h-1)")

    if rule is Rule.F and not precedes(after.E, _at(o_new, h)):
        problems.append("after F, E' is not below o'_h")

    if rule is Rule.P:
        if not precedes(after.E, _at(o_new, h)):
            problems.append("after P, E' is not below o'_h")
        if not precedes(before.E, _at(o_new, h)):
            problems.append("after P, E is not below o'_h")

    if rule is Rule.S:
        s = step.detail.s
        if not e_new or e_new[0] != s:
            problems.append(f"after S, s={_show(s)} is not the leftmost factor of E'")
        if not (precedes(_at(o_new, h), s) and _le(s, after.E)):
            problems.append("after S, o'_h < s <= E' fails")

    if not all(is_even(f) for f in e_new):
        problems.append(f"E'={_show(after.E)} has an odd Lyndon factor")
    if e_new and len(e_new[0]) < len(moved):
        problems.append(f"moved word {_show(moved)} is not inside the leftmost factor of E'")

    return problems


def assert_psi_step(before: PairState, step: TraceStep):
    problems = check_psi_step(before, step)
    if problems:
        raise InvariantViolation(
            f"psi step {step.rule.value} on {before}: " + "; ".join(problems),
            invariant="psi-step",
        )


# ═══════════════════════════════════════════════════════════════════════════
#                             OMEGA STEPS
# ═══════════════════════════════════════════════════════════════════════════

def check_omega_step(before: PairState, step: TraceStep) -> List[str]:
    """Properties of an (omega) step (O', E') -> (O, E)."""
    problems: List[str] = []
    rule, after = step.rule, step.state
    o_prev = before.o_factors
    e_prev = before.e_factors
    o = after.o_factors
    e = after.e_factors
    m = len(o)
    last_prev: Comparand = _at(o_prev, len(o_prev))

    if len(after.E) >= len(before.E):
        problems.append("E did not shrink")

    if not all(is_even(f) for f in e):
        problems.append(f"E={_show(after.E)} has an odd Lyndon factor")
    if not _odd_distinct(o):
        problems.append(f"O={_show(after.O)} has even or repeated factors")

    if rule is Rule.S_PRIME:
        expected = o_prev[:-1] + (o_prev[-1] + e_prev[0],)
    else:
        decomposition = step.detail
        if not isinstance(decomposition, IsfDecomposition):
            return problems + [f"rule {rule.value} carries no ISF"]
        r_j, s_j = decomposition.head, decomposition.last_suffix
        if rule is Rule.P_PRIME:
            expected = o_prev[:-1] + (r_j + s_j + o_prev[-1],)
        else:
            expected = o_prev + (s_j, r_j)
    if o != tuple(expected):
        problems.append(f"O factors {[_show(f) for f in o]} differ from the rule's shape")

    if not precedes(after.E, _at(o, m - 1)):
        problems.append("E is not below o_(m-1)")

    if m and len(o[-1]) >= 2:
        split = standard_factorization(o[-1])
        if e and not _le(e[0], split.s):
            problems.append(f"e_1={_show(e[0])} exceeds s={_show(split.s)} of o_m")
        if rule is Rule.S_PRIME and (split.r, split.s) != (last_prev, e_prev[0]):
            problems.append("after S', o_m is not o'_h ! e'_1")
        if rule is Rule.P_PRIME and (split.r, split.s) != (r_j + s_j, last_prev):
            problems.append("after P', o_m is not r_j s_j ! o'_h")

    return problems


def assert_omega_step(before: PairState, step: TraceStep):
    problems = check_omega_step(before, step)
    if problems:
        raise InvariantViolation(
            f"omega step {step.rule.value} on {before}: " + "; ".join(problems),
            invariant="omega-step",
        )


# ═══════════════════════════════════════════════════════════════════════════
#                            STEP INVERSION
# ═══════════════════════════════════════════════════════════════════════════

def check_step_inversion(trace: BijectionTrace) -> List[str]:
    """
    Each rule of a trace is undone by its counterpart in the other map.

    Insert1 and Extract1 are handled by the trace drivers, not the step
    dispatchers, and are skipped.
    """
    problems: List[str] = []
    undo = omega_step if trace.kind is TraceKind.PSI else psi_step
    for before, step in trace.transitions():
        if step.rule in (Rule.INSERT1, Rule.EXTRACT1):
            continue
        reverse = undo(step.state)
        if reverse.rule is not step.rule.inverse or reverse.state != before:
            problems.append(
                f"{step.rule.value} from {before} undone by "
                f"{reverse.rule.value} to {reverse.state}"
            )
    return problems


def check_trace(trace: BijectionTrace) -> List[str]:
    """All per-step properties plus step inversion for a whole trace."""
    check = check_psi_step if trace.kind is TraceKind.PSI else check_omega_step
    problems: List[str] = []
    for before, step in trace.transitions():
        if step.rule in (Rule.INSERT1, Rule.EXTRACT1):
            continue
        problems.extend(check(before, step))
    problems.extend(check_step_inversion(trace))
    if problems:
        logger.warning(f"{trace.kind.value} trace from {trace.initial}: {len(problems)} violations")
    return problems
