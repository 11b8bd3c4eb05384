"""
Necklace Maps
=============
Subsets S of [n-1] with their letter-block map, multisets of primitive
necklaces, the Gessel-Reutenauer map Phi_S and the alternating-order map
Xi_S, with inverses.

A necklace is stored as its Lyndon representative. The cycle
(x, pi(x), pi^2(x), ...) of a permutation is read as the necklace whose
letters are the blocks of x, pi(x), ...; the inverse maps rank every
position of every necklace and send each rank to the rank of the next
position around its necklace.
"""

import bisect
import functools
import logging
import re
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from sympy.utilities.iterables import multiset_permutations

from ..errors import (
    AlphabetError,
    NecklaceError,
    PreconditionError,
    WeightMismatchError,
)
from ..perms.permutation import Permutation, classify_parity
from ..words.core import (
    WeightVector,
    Word,
    alt_lex_compare_periodic,
    canonical_rotation,
    concat,
    format_word,
    is_primitive,
    lex_compare_periodic,
    parse_word,
    weight,
)
from ..words.lyndon import factors_or_empty, is_lyndon


logger = logging.getLogger(__name__)


# ═══════════════════════════════════════════════════════════════════════════
#                               SUBSETS
# ═══════════════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class SubsetS:
    """
    S = {s_1 < ... < s_{k-1}} inside [n-1].

    Values s_{i-1} < v <= s_i (s_0 = 0, s_k = n) become the letter a_i.
    """
    n: int
    elements: Tuple[int, ...] = ()

    def __post_init__(self):
        elements = tuple(sorted(set(int(e) for e in self.elements)))
        object.__setattr__(self, "elements", elements)
        if self.n < 1:
            raise PreconditionError(f"n must be positive, got {self.n}")
        for e in elements:
            if not 1 <= e <= self.n - 1:
                raise PreconditionError(
                    f"Element {e} of S outside [1, {self.n - 1}]",
                    invariant="subset-range",
                )

    @classmethod
    def full(cls, n: int) -> "SubsetS":
        return cls(n, tuple(range(1, n)))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "SubsetS":
        return cls(n, tuple(i + 1 for i in range(n - 1) if mask >> i & 1))

    @classmethod
    def parse(cls, text: str, n: int) -> "SubsetS":
        """Parse "4,7", "{4,7}", "" or "full"."""
        text = text.strip().strip("{}[]")
        if text == "full":
            return cls.full(n)
        tokens = [t for t in re.split(r"[\s,]+", text) if t]
        try:
            return cls(n, tuple(int(t) for t in tokens))
        except ValueError:
            raise PreconditionError(f"Cannot parse subset {text!r}", invariant="syntax")

    @property
    def size(self) -> int:
        """Alphabet size k = |S| + 1."""
        return len(self.elements) + 1

    @property
    def mask(self) -> int:
        return sum(1 << (e - 1) for e in self.elements)

    @property
    def composition(self) -> WeightVector:
        """alpha(S) = (s_1, s_2 - s_1, ..., n - s_{k-1})."""
        cuts = (0,) + self.elements + (self.n,)
        return tuple(cuts[i + 1] - cuts[i] for i in range(len(cuts) - 1))

    def contains(self, positions: Iterable[int]) -> bool:
        return set(positions) <= set(self.elements)

    def letter_of_value(self, value: int) -> int:
        if not 1 <= value <= self.n:
            raise PreconditionError(
                f"Value {value} outside [1, {self.n}]",
                invariant="value-range",
            )
        return bisect.bisect_left(self.elements, value)

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self.elements) + "}"


def all_subsets(n: int) -> Iterator[SubsetS]:
    for mask in range(1 << max(n - 1, 0)):
        yield SubsetS.from_mask(n, mask)


def word_of_inverse(subset: SubsetS, pi: Permutation) -> Word:
    """Block letters of the one-line notation of pi^{-1}."""
    return tuple(subset.letter_of_value(v) for v in pi.inverse().one_line)


# ═══════════════════════════════════════════════════════════════════════════
#                          NECKLACE MULTISETS
# ═══════════════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class NecklaceMultiset:
    """
    Multiset of primitive necklaces, each stored as its Lyndon representative.

    Members are kept in weakly decreasing order, so copies of a repeated
    necklace are adjacent and their concatenation is the Lyndon factorization
    of the associated word.
    """
    necklaces: Tuple[Word, ...]

    def __post_init__(self):
        members = tuple(tuple(w) for w in self.necklaces)
        for member in members:
            if not is_lyndon(member):
                raise NecklaceError(
                    f"{format_word(member)} is not the Lyndon representative of a primitive necklace",
                    invariant="primitive",
                )
        object.__setattr__(self, "necklaces", tuple(sorted(members, reverse=True)))

    @classmethod
    def from_rotations(cls, words: Iterable[Word]) -> "NecklaceMultiset":
        """Canonicalize arbitrary rotations; each must be primitive."""
        members = []
        for w in words:
            w = tuple(w)
            if not is_primitive(w):
                raise NecklaceError(
                    f"Necklace ({format_word(w)}) is not primitive",
                    invariant="primitive",
                )
            members.append(canonical_rotation(w))
        return cls(tuple(members))

    @classmethod
    def from_word(cls, word: Word) -> "NecklaceMultiset":
        """Lyndon factors of the word, one necklace each."""
        return cls(factors_or_empty(word))

    def to_word(self) -> Word:
        return concat(self.necklaces)

    @property
    def total_length(self) -> int:
        return sum(len(w) for w in self.necklaces)

    @property
    def lengths(self) -> List[int]:
        return sorted((len(w) for w in self.necklaces), reverse=True)

    def weight(self, size: int) -> WeightVector:
        return weight(self.to_word(), size)

    def multiplicities(self) -> Dict[Word, int]:
        return dict(Counter(self.necklaces))

    def is_odd_distinct(self) -> bool:
        """Member of M^o_n: odd and pairwise distinct necklaces."""
        return (
            all(len(w) % 2 == 1 for w in self.necklaces)
            and len(set(self.necklaces)) == len(self.necklaces)
        )

    def render(self) -> str:
        return "".join(
            "(" + ",".join(format_word((letter,)) for letter in w) + ")"
            for w in self.necklaces
        ) or "-"

    def __str__(self) -> str:
        return self.render()

    def to_dict(self) -> dict:
        return {
            "necklaces": self.render(),
            "word": format_word(self.to_word()),
            "lengths": self.lengths,
        }


def parse_necklaces(text: str) -> NecklaceMultiset:
    """Parse "(a,b)(a,b)(a,a,b,c)" or "(ab)(ab)(aabc)"; any rotation is accepted."""
    text = text.strip()
    if text in ("", "-"):
        return NecklaceMultiset(())
    if not re.fullmatch(r"\s*(\([^()]*\)\s*)+", text):
        raise NecklaceError(f"Malformed necklace text {text!r}", invariant="syntax")
    groups = re.findall(r"\(([^()]*)\)", text)
    words = []
    for group in groups:
        letters = re.sub(r"[\s,]+", "", group)
        if not letters:
            raise NecklaceError(f"Empty necklace in {text!r}", invariant="syntax")
        try:
            words.append(parse_word(letters))
        except AlphabetError as e:
            raise NecklaceError(e.message, invariant="syntax")
    return NecklaceMultiset.from_rotations(words)


# ═══════════════════════════════════════════════════════════════════════════
#                       CYCLES <-> NECKLACES
# ═══════════════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class _Position:
    necklace: int
    copy: int
    offset: int
    label: Word


def _cycle_words(subset: SubsetS, pi: Permutation) -> List[Word]:
    return [tuple(subset.letter_of_value(x) for x in cycle) for cycle in pi.cycles()]


def _positions(multiset: NecklaceMultiset) -> List[_Position]:
    positions = []
    copy_counter: Counter = Counter()
    for index, necklace in enumerate(multiset.necklaces):
        copy = copy_counter[necklace]
        copy_counter[necklace] += 1
        for offset in range(len(necklace)):
            label = necklace[offset:] + necklace[:offset]
            positions.append(_Position(index, copy, offset, label))
    return positions


def _permutation_from_ranking(multiset: NecklaceMultiset, ranked: Sequence[_Position]) -> Permutation:
    value_of = {(p.necklace, p.offset): rank for rank, p in enumerate(ranked, start=1)}
    cycles = []
    for index, necklace in enumerate(multiset.necklaces):
        cycles.append([value_of[(index, offset)] for offset in range(len(necklace))])
    return Permutation.from_cycles(cycles, len(ranked))


def _check_weight(subset: SubsetS, multiset: NecklaceMultiset):
    if multiset.total_length != subset.n:
        raise WeightMismatchError(
            f"Necklaces have total length {multiset.total_length}, expected n={subset.n}",
            invariant="weight",
        )
    try:
        found = multiset.weight(subset.size)
    except AlphabetError:
        raise WeightMismatchError(
            f"{multiset} uses letters beyond the {subset.size} blocks of S={subset}",
            invariant="weight",
        )
    if found != subset.composition:
        raise WeightMismatchError(
            f"Weight {found} of {multiset} differs from composition {subset.composition} of S={subset}",
            invariant="weight",
        )


def phi(subset: SubsetS, pi: Permutation) -> NecklaceMultiset:
    """
    Gessel-Reutenauer map: each cycle of pi becomes a primitive necklace.

    Raises:
        PreconditionError: Des(pi) not contained in S
    """
    if pi.n != subset.n:
        raise PreconditionError(f"S lives in [{subset.n - 1}] but pi has n={pi.n}")
    if not subset.contains(pi.descents):
        raise PreconditionError(
            f"Des({pi}) = {sorted(pi.descents)} is not contained in S={subset}",
            invariant="descents-in-S",
        )
    return NecklaceMultiset.from_rotations(_cycle_words(subset, pi))


def phi_inv(subset: SubsetS, multiset: NecklaceMultiset) -> Permutation:
    """
    Rank all necklace positions by plain lex order of their periodic labels;
    identical labels on copies of a repeated necklace are ordered by copy index.
    """
    _check_weight(subset, multiset)

    def compare(p: _Position, q: _Position) -> int:
        order = lex_compare_periodic(p.label, q.label).value
        return order if order else p.copy - q.copy

    ranked = sorted(_positions(multiset), key=functools.cmp_to_key(compare))
    return _permutation_from_ranking(multiset, ranked)


def xi(subset: SubsetS, pi: Permutation) -> NecklaceMultiset:
    """
    Alternating-order map on permutations with only odd cycles.

    Raises:
        PreconditionError: pi has an even cycle, or Asc(pi) not contained in S
    """
    if pi.n != subset.n:
        raise PreconditionError(f"S lives in [{subset.n - 1}] but pi has n={pi.n}")
    if not classify_parity(pi).is_odd:
        raise PreconditionError(
            f"{pi} has an even cycle",
            invariant="odd-cycles",
        )
    if not subset.contains(pi.ascents):
        raise PreconditionError(
            f"Asc({pi}) = {sorted(pi.ascents)} is not contained in S={subset}",
            invariant="ascents-in-S",
        )
    multiset = NecklaceMultiset.from_rotations(_cycle_words(subset, pi))
    if not multiset.is_odd_distinct():
        raise NecklaceError(
            f"Image {multiset} has repeated necklaces",
            invariant="distinct-necklaces",
        )
    return multiset


def xi_inv(subset: SubsetS, multiset: NecklaceMultiset) -> Permutation:
    """
    Rank all necklace positions by the alternating order of their periodic
    labels; distinct odd primitive necklaces never tie.
    """
    if any(len(w) % 2 == 0 for w in multiset.necklaces):
        raise NecklaceError(f"{multiset} has an even necklace", invariant="odd-necklaces")
    if len(set(multiset.necklaces)) != len(multiset.necklaces):
        raise NecklaceError(f"{multiset} has a repeated necklace", invariant="distinct-necklaces")
    _check_weight(subset, multiset)

    def compare(p: _Position, q: _Position) -> int:
        order = alt_lex_compare_periodic(p.label, q.label).value
        if order == 0 and (p.necklace, p.offset) != (q.necklace, q.offset):
            raise NecklaceError(
                f"Positions tie in the alternating order: {format_word(p.label)}",
                invariant="no-ties",
            )
        return order

    ranked = sorted(_positions(multiset), key=functools.cmp_to_key(compare))
    return _permutation_from_ranking(multiset, ranked)


def multisets_of_weight(composition: WeightVector) -> Iterator[NecklaceMultiset]:
    """Every multiset of primitive necklaces of the given weight, once each."""
    letters = [letter for letter, count in enumerate(composition) for _ in range(count)]
    for arrangement in multiset_permutations(letters):
        yield NecklaceMultiset.from_word(tuple(arrangement))
