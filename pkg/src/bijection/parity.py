"""
Parity Bijection
================
The weight-preserving bijection Psi from words whose Lyndon factors are odd
and distinct (W^o_n) to words whose Lyndon factors are even except possibly
one factor of length one (W^e_n), and its inverse Omega.

Both maps work on a pair of words (O, E). Psi moves material from O to E
one step at a time (rules S, P, F, then Insert1 for odd n); Omega moves it
back (Extract1 for odd n, then rules S', P', F'). Every call returns the full
trace of states, which renders as the step tables used for golden tests.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, List, Optional, Tuple, Union

from ..config import get_config
from ..errors import WordClassError
from ..words.core import (
    EMPTY_WORD,
    INFINITY,
    Comparand,
    Word,
    concat,
    format_factors,
    format_word,
    precedes,
)
from ..words.lyndon import (
    IsfDecomposition,
    StandardFactorization,
    factors_or_empty,
    is_even,
    is_odd,
    isf,
    standard_factorization,
)


logger = logging.getLogger(__name__)


class WordClass(Enum):
    """Parity class of a word's Lyndon factorization."""
    ODD_DISTINCT = "odd_distinct"
    EVEN_PLUS_SINGLETON = "even_plus_singleton"
    # the empty word and single letters belong to both classes
    BOTH = "both"
    NEITHER = "neither"

    @property
    def is_odd(self) -> bool:
        return self in (WordClass.ODD_DISTINCT, WordClass.BOTH)

    @property
    def is_even(self) -> bool:
        return self in (WordClass.EVEN_PLUS_SINGLETON, WordClass.BOTH)


class Rule(Enum):
    """Step types of Psi (unprimed) and Omega (primed)."""
    S = "S"
    P = "P"
    F = "F"
    INSERT1 = "Insert1"
    S_PRIME = "S'"
    P_PRIME = "P'"
    F_PRIME = "F'"
    EXTRACT1 = "Extract1"

    @property
    def label(self) -> str:
        return f"({self.value})"

    @property
    def inverse(self) -> "Rule":
        return _INVERSE_RULES[self]


_INVERSE_RULES = {
    Rule.S: Rule.S_PRIME,
    Rule.P: Rule.P_PRIME,
    Rule.F: Rule.F_PRIME,
    Rule.INSERT1: Rule.EXTRACT1,
    Rule.S_PRIME: Rule.S,
    Rule.P_PRIME: Rule.P,
    Rule.F_PRIME: Rule.F,
    Rule.EXTRACT1: Rule.INSERT1,
}


class TraceKind(Enum):
    PSI = "psi"
    OMEGA = "omega"


# ═══════════════════════════════════════════════════════════════════════════
#                          WORD CLASSIFICATION
# ═══════════════════════════════════════════════════════════════════════════

def _odd_violation(factors: Tuple[Word, ...]) -> Optional[str]:
    if any(is_even(f) for f in factors):
        return "even-factor"
    if len(set(factors)) != len(factors):
        return "repeated-odd-factor"
    return None


def _even_violation(factors: Tuple[Word, ...]) -> Optional[str]:
    odd = [f for f in factors if is_odd(f)]
    if any(len(f) > 1 for f in odd):
        return "long-odd-factor"
    if len(odd) > 1:
        return "several-singleton-factors"
    return None


def classify_word(word: Word) -> WordClass:
    factors = factors_or_empty(tuple(word))
    odd = _odd_violation(factors) is None
    even = _even_violation(factors) is None
    if odd and even:
        return WordClass.BOTH
    if odd:
        return WordClass.ODD_DISTINCT
    if even:
        return WordClass.EVEN_PLUS_SINGLETON
    return WordClass.NEITHER


# ═══════════════════════════════════════════════════════════════════════════
#                           STATES AND TRACES
# ═══════════════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class PairState:
    """The pair (O, E) of words manipulated by both maps."""
    O: Word = EMPTY_WORD
    E: Word = EMPTY_WORD

    @property
    def o_factors(self) -> Tuple[Word, ...]:
        return factors_or_empty(self.O)

    @property
    def e_factors(self) -> Tuple[Word, ...]:
        return factors_or_empty(self.E)

    def __str__(self) -> str:
        return f"({format_word(self.O)}, {format_word(self.E)})"


# ISF for omega steps, standard factorization for splittable psi steps
StepDetail = Union[StandardFactorization, IsfDecomposition, None]


@dataclass(frozen=True)
class TraceStep:
    """State after a rule (rule is None for the initial state)."""
    rule: Optional[Rule]
    state: PairState
    detail: StepDetail = field(default=None, compare=False)


@dataclass(frozen=True)
class BijectionTrace:
    """Initial state followed by the state after every rule application."""
    kind: TraceKind
    steps: Tuple[TraceStep, ...]

    @property
    def initial(self) -> PairState:
        return self.steps[0].state

    @property
    def final(self) -> PairState:
        return self.steps[-1].state

    @property
    def rules(self) -> List[Rule]:
        return [s.rule for s in self.steps[1:]]

    @property
    def result(self) -> Word:
        return self.final.E if self.kind is TraceKind.PSI else self.final.O

    def transitions(self) -> Iterator[Tuple[PairState, TraceStep]]:
        """(state before, step) for every rule application."""
        for before, step in zip(self.steps, self.steps[1:]):
            yield before.state, step

    def rows(self, bar: str = "|", dashed_bar: str = "!", empty: str = "-") -> List[Tuple[str, str, str]]:
        """(O, rule, E) text rows; the rule of the initial row is empty."""
        rows = []
        for step in self.steps:
            if self.kind is TraceKind.PSI:
                o_text, e_text = _psi_row(step, bar, dashed_bar, empty)
            else:
                o_text, e_text = _omega_row(step, bar, dashed_bar, empty)
            rows.append((o_text, step.rule.label if step.rule else "", e_text))
        return rows

    def records(self) -> List[dict]:
        """Machine-readable rows {step, rule, O, E}."""
        return [
            {
                "step": i,
                "rule": step.rule.value if step.rule else None,
                "O": o_text,
                "E": e_text,
            }
            for i, (step, (o_text, _, e_text)) in enumerate(zip(self.steps, self.rows()))
        ]

    def render(self) -> str:
        rows = self.rows()
        header = ("O'", "", "E'") if self.kind is TraceKind.OMEGA else ("O", "", "E")
        rows = [header] + rows
        width_o = max(len(r[0]) for r in rows)
        width_rule = max(len(r[1]) for r in rows)
        return "\n".join(
            f"{o:>{width_o}}  {rule:^{width_rule}}  {e}".rstrip() for o, rule, e in rows
        )


def _render_marked_last(factors: Tuple[Word, ...], bar: str, dashed_bar: str, empty: str) -> str:
    if not factors:
        return empty
    parts = [format_word(f) for f in factors[:-1]]
    last = factors[-1]
    if len(last) >= 2:
        parts.append(standard_factorization(last).render(dashed_bar))
    else:
        parts.append(format_word(last))
    return bar.join(parts)


def _psi_row(step: TraceStep, bar: str, dashed_bar: str, empty: str) -> Tuple[str, str]:
    state = step.state
    o_text = _render_marked_last(state.o_factors, bar, dashed_bar, empty)
    if step.rule is Rule.INSERT1:
        e_text = format_factors(state.e_factors, bar, empty)
    else:
        e_text = format_word(state.E, empty)
    return o_text, e_text


def _omega_row(step: TraceStep, bar: str, dashed_bar: str, empty: str) -> Tuple[str, str]:
    state = step.state
    o_factors = state.o_factors
    e_factors = state.e_factors
    o_text = format_factors(o_factors, bar, empty)
    if not e_factors:
        return o_text, empty
    parts = [format_word(f) for f in e_factors]
    last_o: Comparand = o_factors[-1] if o_factors else INFINITY
    # the ISF is shown when the next step will compute it
    if all(is_even(f) for f in e_factors) and not precedes(last_o, e_factors[0]):
        parts[0] = isf(e_factors[0], last_o).render(dashed_bar)
    return o_text, bar.join(parts)


# ═══════════════════════════════════════════════════════════════════════════
#                                 PSI
# ═══════════════════════════════════════════════════════════════════════════

def psi_step(state: PairState) -> TraceStep:
    """
    One (psi) step on a state with |O| >= 2.

    Returns:
        TraceStep with the rule applied and the new state
    """
    factors = state.o_factors
    if len(state.O) < 2:
        raise WordClassError(f"psi step needs |O| >= 2, got O={format_word(state.O)}")

    last = factors[-1]
    previous: Comparand = factors[-2] if len(factors) >= 2 else INFINITY
    prefix = concat(factors[:-1])

    if len(last) >= 2:
        split = standard_factorization(last)
        if precedes(split.s, previous):
            if is_odd(split.r):
                after = PairState(prefix + split.r, split.s + state.E)
                return TraceStep(Rule.S, after, split)
            after = PairState(prefix + split.s, split.r + state.E)
            return TraceStep(Rule.P, after, split)

    after = PairState(concat(factors[:-2]), last + factors[-2] + state.E)
    return TraceStep(Rule.F, after)


def insert_singleton(state: PairState) -> TraceStep:
    """Move the single letter O into E as a new Lyndon factor."""
    letter = state.O
    e_factors = list(state.e_factors)
    # leftmost slot keeping the factors weakly decreasing
    index = next((i for i, f in enumerate(e_factors) if not precedes(letter, f)), len(e_factors))
    e_factors.insert(index, letter)
    return TraceStep(Rule.INSERT1, PairState(EMPTY_WORD, concat(e_factors)))


def psi_trace(word: Word, check_invariants: Optional[bool] = None) -> BijectionTrace:
    """
    Psi with its full trace.

    Args:
        word: Word in W^o_n
        check_invariants: Assert the per-step properties; defaults to config

    Raises:
        WordClassError: word not in W^o_n
    """
    word = tuple(word)
    violation = _odd_violation(factors_or_empty(word))
    if violation:
        raise WordClassError(
            f"{format_word(word)} does not have odd distinct Lyndon factors",
            invariant=violation,
        )
    if check_invariants is None:
        check_invariants = get_config().verification.check_invariants
    if check_invariants:
        from .invariants import assert_psi_step

    steps = [TraceStep(None, PairState(word, EMPTY_WORD))]
    state = steps[0].state
    while len(state.O) >= 2:
        step = psi_step(state)
        logger.debug(f"psi {step.rule.value}: {state} -> {step.state}")
        if check_invariants:
            assert_psi_step(state, step)
        steps.append(step)
        state = step.state

    if len(state.O) == 1:
        step = insert_singleton(state)
        steps.append(step)

    return BijectionTrace(TraceKind.PSI, tuple(steps))


def psi(word: Word) -> Word:
    return psi_trace(word).result


# ═══════════════════════════════════════════════════════════════════════════
#                                OMEGA
# ═══════════════════════════════════════════════════════════════════════════

def extract_singleton(state: PairState) -> TraceStep:
    """Remove the unique length-1 factor of E' and make it O'."""
    e_factors = list(state.e_factors)
    index = next(i for i, f in enumerate(e_factors) if len(f) == 1)
    letter = e_factors.pop(index)
    return TraceStep(Rule.EXTRACT1, PairState(state.O + letter, concat(e_factors)))


def omega_step(state: PairState) -> TraceStep:
    """One (omega) step on a state with E' nonempty."""
    o_factors = state.o_factors
    e_factors = state.e_factors
    if not e_factors:
        raise WordClassError("omega step needs a nonempty E'")

    last: Comparand = o_factors[-1] if o_factors else INFINITY
    first = e_factors[0]
    rest = concat(e_factors[1:])

    if precedes(last, first):
        return TraceStep(Rule.S_PRIME, PairState(state.O + first, rest))

    decomposition = isf(first, last)
    r_j, s_j = decomposition.head, decomposition.last_suffix
    new_e = concat(decomposition.remaining) + rest
    if precedes(s_j, last):
        return TraceStep(Rule.F_PRIME, PairState(state.O + s_j + r_j, new_e), decomposition)
    # o'_h <= s_j, so O' is nonempty here
    head = concat(o_factors[:-1])
    return TraceStep(Rule.P_PRIME, PairState(head + r_j + s_j + last, new_e), decomposition)


def omega_trace(word: Word, check_invariants: Optional[bool] = None) -> BijectionTrace:
    """
    Omega with its full trace.

    Raises:
        WordClassError: word not in W^e_n
    """
    word = tuple(word)
    violation = _even_violation(factors_or_empty(word))
    if violation:
        raise WordClassError(
            f"{format_word(word)} has odd Lyndon factors beyond one letter",
            invariant=violation,
        )
    if check_invariants is None:
        check_invariants = get_config().verification.check_invariants
    if check_invariants:
        from .invariants import assert_omega_step

    steps = [TraceStep(None, PairState(EMPTY_WORD, word))]
    state = steps[0].state
    if len(word) % 2 == 1:
        step = extract_singleton(state)
        steps.append(step)
        state = step.state

    while state.E:
        step = omega_step(state)
        logger.debug(f"omega {step.rule.value}: {state} -> {step.state}")
        if check_invariants:
            assert_omega_step(state, step)
        steps.append(step)
        state = step.state

    return BijectionTrace(TraceKind.OMEGA, tuple(steps))


def omega(word: Word) -> Word:
    return omega_trace(word).result
