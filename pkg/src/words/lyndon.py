"""
Lyndon Words
============
Lyndon predicate, unique Lyndon factorization (Duval's scan), the
suffix-minima factorization used as an independent check, the standard
factorization, the iterated standard factorization (ISF) and enumeration.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, List, Tuple

from ..errors import EmptyWordError, IsfTerminationError, NotLyndonError
from .core import (
    INFINITY,
    Comparand,
    Word,
    concat,
    format_factors,
    format_word,
    precedes,
)


logger = logging.getLogger(__name__)


def is_lyndon(word: Word) -> bool:
    """Nonempty and strictly smaller than every proper suffix."""
    word = tuple(word)
    if not word:
        return False
    return all(word < word[i:] for i in range(1, len(word)))


def is_odd(word: Word) -> bool:
    return len(word) % 2 == 1


def is_even(word: Word) -> bool:
    return len(word) % 2 == 0


# ═══════════════════════════════════════════════════════════════════════════
#                        LYNDON FACTORIZATION
# ═══════════════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class LyndonFactorization:
    """Weakly decreasing sequence of Lyndon words whose product is the word."""
    factors: Tuple[Word, ...]

    @property
    def word(self) -> Word:
        return concat(self.factors)

    @property
    def starts(self) -> List[int]:
        """1-based start position of each factor."""
        positions, offset = [], 1
        for factor in self.factors:
            positions.append(offset)
            offset += len(factor)
        return positions

    @property
    def lengths(self) -> List[int]:
        return [len(f) for f in self.factors]

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.factors)

    def render(self, bar: str = "|") -> str:
        return format_factors(self.factors, bar)

    def __str__(self) -> str:
        return self.render()


def lyndon_factorize(word: Word) -> LyndonFactorization:
    """
    Unique Lyndon factorization by Duval's linear scan.

    Args:
        word: Nonempty word

    Returns:
        LyndonFactorization with factors l_1 >= l_2 >= ... >= l_m
    """
    word = tuple(word)
    if not word:
        raise EmptyWordError("Cannot factorize the empty word")

    factors: List[Word] = []
    n = len(word)
    k = 0
    while k < n:
        i, j = k, k + 1
        while j < n and word[i] <= word[j]:
            i = k if word[i] < word[j] else i + 1
            j += 1
        period = j - i
        while k <= i:
            factors.append(word[k:k + period])
            k += period
    return LyndonFactorization(tuple(factors))


def factors_or_empty(word: Word) -> Tuple[Word, ...]:
    """Lyndon factors of a possibly empty word."""
    return lyndon_factorize(word).factors if word else ()


def factor_starts_via_suffix_minima(word: Word) -> List[int]:
    """
    1-based positions q whose suffix is smaller than every earlier suffix.

    These are exactly the start positions of the Lyndon factors.
    """
    word = tuple(word)
    if not word:
        raise EmptyWordError("Cannot factorize the empty word")
    starts: List[int] = []
    current_min = None
    for q in range(len(word)):
        suffix = word[q:]
        if current_min is None or suffix < current_min:
            starts.append(q + 1)
            current_min = suffix
    return starts


# ═══════════════════════════════════════════════════════════════════════════
#                       STANDARD FACTORIZATION
# ═══════════════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class StandardFactorization:
    """l = r s with s the smallest proper suffix of the Lyndon word l."""
    r: Word
    s: Word

    @property
    def word(self) -> Word:
        return self.r + self.s

    def render(self, dashed_bar: str = "!") -> str:
        return f"{format_word(self.r)}{dashed_bar}{format_word(self.s)}"

    def __str__(self) -> str:
        return self.render()


def smallest_proper_suffix(word: Word) -> Word:
    word = tuple(word)
    if len(word) < 2:
        raise NotLyndonError(
            f"Word {format_word(word)} has no proper nonempty suffix",
            invariant="length-at-least-2",
        )
    return min(word[i:] for i in range(1, len(word)))


def standard_factorization(word: Word) -> StandardFactorization:
    """
    Standard factorization of a Lyndon word of length at least 2.

    The smallest proper suffix s is also the longest proper Lyndon suffix,
    and both r and s are Lyndon with r < rs < s.
    """
    word = tuple(word)
    if len(word) < 2:
        raise NotLyndonError(
            f"Standard factorization needs length >= 2, got {format_word(word)}",
            invariant="length-at-least-2",
        )
    if not is_lyndon(word):
        raise NotLyndonError(
            f"{format_word(word)} is not a Lyndon word",
            invariant="lyndon",
        )
    s = smallest_proper_suffix(word)
    return StandardFactorization(r=word[:len(word) - len(s)], s=s)


# ═══════════════════════════════════════════════════════════════════════════
#                  ITERATED STANDARD FACTORIZATION
# ═══════════════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class IsfDecomposition:
    """
    l = r_j s_j s_{j-1} ... s_1 with respect to a reference word u.

    ``tail`` holds (s_j, ..., s_1) in reading order.
    """
    head: Word
    tail: Tuple[Word, ...]
    reference: Comparand

    @property
    def word(self) -> Word:
        return self.head + concat(self.tail)

    @property
    def last_suffix(self) -> Word:
        """s_j, the suffix at which the iteration stopped."""
        return self.tail[0]

    @property
    def remaining(self) -> Tuple[Word, ...]:
        """s_{j-1}, ..., s_1."""
        return self.tail[1:]

    @property
    def depth(self) -> int:
        return len(self.tail)

    def render(self, dashed_bar: str = "!") -> str:
        return dashed_bar.join(format_word(w) for w in (self.head,) + self.tail)

    def __str__(self) -> str:
        return self.render()


def isf(word: Word, reference: Comparand = INFINITY) -> IsfDecomposition:
    """
    Iterated standard factorization of a Lyndon word with respect to u.

    Repeatedly strips the smallest proper suffix while it is even and
    smaller than u.

    Args:
        word: Lyndon word of length >= 2
        reference: Word or INFINITY

    Returns:
        IsfDecomposition (r_j; s_j, ..., s_1)

    Raises:
        IsfTerminationError: if the remainder drops below length 2 first
    """
    current = tuple(word)
    if reference is not INFINITY:
        reference = tuple(reference)
    removed: List[Word] = []
    while True:
        if len(current) < 2:
            raise IsfTerminationError(
                f"ISF of {format_word(word)} w.r.t. {format_word(reference)} "
                f"reached remainder {format_word(current)} before stopping",
                invariant="isf-termination",
            )
        factorization = standard_factorization(current)
        s = factorization.s
        removed.append(s)
        if is_odd(s) or not precedes(s, reference):
            break
        current = factorization.r

    decomposition = IsfDecomposition(
        head=factorization.r,
        tail=tuple(reversed(removed)),
        reference=reference,
    )
    logger.debug(f"ISF {format_word(word)} wrt {format_word(reference)}: {decomposition}")
    return decomposition


# ═══════════════════════════════════════════════════════════════════════════
#                            ENUMERATION
# ═══════════════════════════════════════════════════════════════════════════

def enumerate_lyndon_words(size: int, max_len: int) -> Iterator[Word]:
    """
    All Lyndon words of length <= max_len over ``size`` letters, in
    lexicographic order (Fredricksen-Kessler-Maiorana / Duval generation).
    """
    if max_len < 1 or size < 1:
        return
    word = [-1]
    while word:
        word[-1] += 1
        yield tuple(word)
        m = len(word)
        while len(word) < max_len:
            word.append(word[-m])
        while word and word[-1] == size - 1:
            word.pop()
