"""
Core Words
==========
Alphabet, words, weights and the orders everything else is built on.

Letters are integer ranks ``0..k-1``; a word is a plain tuple of ranks, so the
built-in tuple comparison already is the lexicographic order (a proper prefix
is smaller than its extensions). The textual form maps rank ``i`` to the
``(i+1)``-th lowercase letter and is only a view.
"""

import itertools
import logging
import string
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Optional, Tuple, Union

from ..errors import AlphabetError, EmptyWordError


logger = logging.getLogger(__name__)

# a word, as a tuple of letter ranks
Word = Tuple[int, ...]

# exponent vector (count of a_1, ..., count of a_k)
WeightVector = Tuple[int, ...]

EMPTY_WORD: Word = ()
TEXT_LETTERS = string.ascii_lowercase


class Ordering(Enum):
    """Result of a three-way comparison."""
    LT = -1
    EQ = 0
    GT = 1

    def reversed(self) -> "Ordering":
        return Ordering(-self.value)

    @classmethod
    def of(cls, a, b) -> "Ordering":
        if a < b:
            return cls.LT
        if a > b:
            return cls.GT
        return cls.EQ


class Infinity:
    """Comparand strictly greater than every word."""

    _instance: Optional["Infinity"] = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    def __str__(self) -> str:
        return "inf"

    def __hash__(self) -> int:
        return hash("INFINITY")

    def __eq__(self, other) -> bool:
        return other is self

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return other is self

    def __gt__(self, other) -> bool:
        return other is not self

    def __ge__(self, other) -> bool:
        return True


INFINITY = Infinity()

# a word or the infinity sentinel
Comparand = Union[Word, Infinity]


@dataclass(frozen=True)
class Alphabet:
    """Totally ordered alphabet a_1 < a_2 < ... < a_k, stored as its size k."""
    size: int

    def __post_init__(self):
        if self.size < 1:
            raise AlphabetError(f"Alphabet size must be positive, got {self.size}")

    @property
    def letters(self) -> range:
        return range(self.size)

    def contains(self, word: Word) -> bool:
        return all(0 <= letter < self.size for letter in word)

    def validate(self, word: Word) -> Word:
        for letter in word:
            if not 0 <= letter < self.size:
                raise AlphabetError(
                    f"Letter rank {letter} outside alphabet of size {self.size}",
                    invariant="letter-in-alphabet",
                )
        return word

    def words(self, length: int) -> Iterator[Word]:
        """All words of the given length, in lexicographic order."""
        return itertools.product(range(self.size), repeat=length)

    def weight(self, word: Word) -> WeightVector:
        return weight(word, self.size)


# ═══════════════════════════════════════════════════════════════════════════
#                              ORDERS
# ═══════════════════════════════════════════════════════════════════════════

def lex_compare(u: Comparand, v: Comparand) -> Ordering:
    """Lexicographic order on words, with INFINITY above every word."""
    if u is INFINITY or v is INFINITY:
        if u is v:
            return Ordering.EQ
        return Ordering.GT if u is INFINITY else Ordering.LT
    return Ordering.of(tuple(u), tuple(v))


def precedes(u: Comparand, v: Comparand) -> bool:
    """Strict ``u < v`` under lex_compare."""
    return lex_compare(u, v) is Ordering.LT


def _first_periodic_difference(u: Word, v: Word) -> Optional[int]:
    # Two periodic sequences that agree on |u|+|v| letters are identical
    # (Fine-Wilf), so the scan window is finite.
    if not u or not v:
        raise EmptyWordError("Periodic comparison needs nonempty words")
    for i in range(len(u) + len(v)):
        if u[i % len(u)] != v[i % len(v)]:
            return i
    return None


def lex_compare_periodic(u: Word, v: Word) -> Ordering:
    """Lexicographic order of the infinite sequences uuu... and vvv..."""
    i = _first_periodic_difference(u, v)
    if i is None:
        return Ordering.EQ
    return Ordering.of(u[i % len(u)], v[i % len(v)])


def alt_lex_compare_periodic(u: Word, v: Word) -> Ordering:
    """
    Alternating lexicographic order of uuu... and vvv...

    At the first difference (1-based position i) the letters decide the order
    when i is odd, and the reversed order when i is even.
    """
    i = _first_periodic_difference(u, v)
    if i is None:
        return Ordering.EQ
    result = Ordering.of(u[i % len(u)], v[i % len(v)])
    # 0-based odd index is an even 1-based position
    return result.reversed() if i % 2 == 1 else result


# ═══════════════════════════════════════════════════════════════════════════
#                         WORD UTILITIES
# ═══════════════════════════════════════════════════════════════════════════

def weight(word: Word, size: int) -> WeightVector:
    """Count of each letter a_1..a_k in the word."""
    counts = [0] * size
    for letter in word:
        if not 0 <= letter < size:
            raise AlphabetError(f"Letter rank {letter} outside alphabet of size {size}")
        counts[letter] += 1
    return tuple(counts)


def concat(words: Iterable[Word]) -> Word:
    return tuple(itertools.chain.from_iterable(words))


def rotations(word: Word) -> Iterator[Word]:
    for i in range(len(word)):
        yield word[i:] + word[:i]


def is_primitive(word: Word) -> bool:
    """True unless the word is r^j for some j >= 2."""
    n = len(word)
    if n == 0:
        return False
    return primitive_root_length(word) == n


def primitive_root_length(word: Word) -> int:
    """Length of the shortest r with word = r^j."""
    n = len(word)
    for p in range(1, n + 1):
        if n % p == 0 and word[:n - p] == word[p:]:
            return p
    return n


def canonical_rotation(word: Word) -> Word:
    """Smallest rotation; for a primitive word this is its Lyndon conjugate."""
    if not word:
        raise EmptyWordError("Empty word has no rotations")
    return min(rotations(word))


# ═══════════════════════════════════════════════════════════════════════════
#                            TEXT CODEC
# ═══════════════════════════════════════════════════════════════════════════

def parse_word(text: str, alphabet: Optional[Alphabet] = None, empty: str = "-") -> Word:
    """
    Parse the textual form ("abc", "-" for the empty word) into ranks.

    Args:
        text: Contiguous lowercase letters, or the empty marker
        alphabet: If given, every letter must belong to it
        empty: Marker for the empty word

    Returns:
        Tuple of letter ranks
    """
    text = text.strip()
    if text == empty or text == "":
        return EMPTY_WORD
    if alphabet is not None and alphabet.size > len(TEXT_LETTERS):
        raise AlphabetError(
            f"Alphabet of size {alphabet.size} has no textual form",
            invariant="text-alphabet-size",
        )
    word = []
    for char in text:
        rank = TEXT_LETTERS.find(char)
        if rank < 0:
            raise AlphabetError(f"Unexpected character {char!r} in word {text!r}")
        word.append(rank)
    result = tuple(word)
    if alphabet is not None:
        alphabet.validate(result)
    return result


def format_word(word: Comparand, empty: str = "-") -> str:
    """Render ranks as lowercase letters ("-" for the empty word)."""
    if word is INFINITY:
        return str(INFINITY)
    if not word:
        return empty
    if max(word) >= len(TEXT_LETTERS) or min(word) < 0:
        raise AlphabetError(
            f"Word {word} has letters without a textual form",
            invariant="text-alphabet-size",
        )
    return "".join(TEXT_LETTERS[letter] for letter in word)


def format_factors(factors: Iterable[Word], bar: str = "|", empty: str = "-") -> str:
    parts = [format_word(f, empty) for f in factors]
    return bar.join(parts) if parts else empty
