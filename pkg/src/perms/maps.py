"""
Permutation Maps
================
Comparison maps on permutations: Bóna's bijection S^o_n -> S^e_n for even n,
the hat transform (cycle form with parentheses removed) and the
standardization of words into permutations.
"""

import logging
from typing import List, Sequence, Tuple

from ..errors import PermutationError, PreconditionError
from ..words.core import Word
from .permutation import CyclePolicy, Permutation, classify_parity


logger = logging.getLogger(__name__)


def bona_map(pi: Permutation) -> Permutation:
    """
    Bóna's bijection for even n.

    Write pi in standard cycle form C_1 C_2 ... C_2m (each cycle starts with
    its largest element, cycles by increasing first element) and move the last
    element of C_{2i-1} to the end of C_{2i}; empty cycles disappear.

    Raises:
        PreconditionError: n odd, or pi not in S^o_n
    """
    if pi.n % 2 == 1:
        raise PreconditionError(
            f"Bóna's bijection is only defined for even n, got n={pi.n}",
            invariant="even-n",
        )
    if not classify_parity(pi).is_odd:
        raise PreconditionError(
            f"{pi} has an even cycle; Bóna's bijection needs all cycles odd",
            invariant="odd-cycles",
        )

    cycles = [list(c) for c in pi.cycle_form(CyclePolicy.LARGEST_FIRST_ASCENDING).cycles]
    # n even with all cycles odd forces an even number of cycles
    result: List[List[int]] = []
    for i in range(0, len(cycles), 2):
        first, second = cycles[i], cycles[i + 1]
        moved = first.pop()
        second.append(moved)
        if first:
            result.append(first)
        result.append(second)

    image = Permutation.from_cycles(result, pi.n)
    logger.debug(f"bona_map {pi} -> {image}")
    return image


def foata_hat(pi: Permutation) -> Tuple[int, ...]:
    """
    Hat transform: cycles starting with their smallest element, ordered by
    decreasing first element, with the parentheses removed.
    """
    form = pi.cycle_form(CyclePolicy.SMALLEST_FIRST_DESCENDING)
    return tuple(v for cycle in form.cycles for v in cycle)


def left_to_right_minima(values: Sequence[int]) -> List[int]:
    """0-based positions holding a new running minimum."""
    positions: List[int] = []
    current = None
    for i, v in enumerate(values):
        if current is None or v < current:
            positions.append(i)
            current = v
    return positions


def foata_hat_inverse(values: Sequence[int]) -> Permutation:
    """Cut the sequence before each left-to-right minimum and read cycles."""
    values = tuple(values)
    if sorted(values) != list(range(1, len(values) + 1)):
        raise PermutationError(
            f"{list(values)} is not a permutation of [{len(values)}]",
            invariant="bijection",
        )
    cuts = left_to_right_minima(values) + [len(values)]
    cycles = [values[cuts[i]:cuts[i + 1]] for i in range(len(cuts) - 1)]
    return Permutation.from_cycles(cycles, len(values))


# ═══════════════════════════════════════════════════════════════════════════
#                           STANDARDIZATION
# ═══════════════════════════════════════════════════════════════════════════

def standard_permutation(word: Word) -> Permutation:
    """
    Number the occurrences of a_1 left to right, then those of a_2, and so on.
    """
    order = sorted(range(len(word)), key=lambda i: (word[i], i))
    values = [0] * len(word)
    for label, position in enumerate(order, start=1):
        values[position] = label
    return Permutation(tuple(values))


def costandard_permutation(word: Word) -> Permutation:
    """Like standard_permutation, but each letter's occurrences right to left."""
    order = sorted(range(len(word)), key=lambda i: (word[i], -i))
    values = [0] * len(word)
    for label, position in enumerate(order, start=1):
        values[position] = label
    return Permutation(tuple(values))

