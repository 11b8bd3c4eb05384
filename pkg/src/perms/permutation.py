"""
Permutations
============
One-line and cycle representations, descent/ascent sets and the cycle
parity classes S^o_n (all cycles odd) and S^e_n (all cycles even except
possibly one fixed point).
"""

import itertools
import logging
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple

from ..errors import PermutationError


logger = logging.getLogger(__name__)

Cycle = Tuple[int, ...]


class CyclePolicy(Enum):
    """How a cycle form is presented."""
    # each cycle starts with its largest element, cycles by increasing first element
    LARGEST_FIRST_ASCENDING = "largest_first_ascending"
    # each cycle starts with its smallest element, cycles by decreasing first element
    SMALLEST_FIRST_DESCENDING = "smallest_first_descending"


class ParityClass(Enum):
    """Cycle parity class of a permutation."""
    ODD_CYCLES = "odd_cycles"
    EVEN_CYCLES = "even_cycles"
    # only the identity on [1] is in both classes
    BOTH = "both"
    NEITHER = "neither"

    @property
    def is_odd(self) -> bool:
        return self in (ParityClass.ODD_CYCLES, ParityClass.BOTH)

    @property
    def is_even(self) -> bool:
        return self in (ParityClass.EVEN_CYCLES, ParityClass.BOTH)


@dataclass(frozen=True)
class BoundarySets:
    """Descent and ascent sets; they partition [n-1]."""
    n: int
    descents: FrozenSet[int]
    ascents: FrozenSet[int]

    @property
    def descent_mask(self) -> int:
        """Bit i-1 set iff i is a descent."""
        return sum(1 << (i - 1) for i in self.descents)

    @property
    def ascent_mask(self) -> int:
        return sum(1 << (i - 1) for i in self.ascents)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "descents": sorted(self.descents),
            "ascents": sorted(self.ascents),
        }


@dataclass(frozen=True)
class CycleForm:
    """Cycles of a permutation, presented under an explicit policy."""
    cycles: Tuple[Cycle, ...]
    policy: CyclePolicy

    @property
    def lengths(self) -> List[int]:
        return [len(c) for c in self.cycles]

    def render(self) -> str:
        return "".join("(" + ",".join(str(v) for v in c) + ")" for c in self.cycles)

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class Permutation:
    """
    Bijection on [n] stored in one-line notation (1-based values).
    """
    one_line: Tuple[int, ...]
    _cycles: Optional[Tuple[Cycle, ...]] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        values = tuple(int(v) for v in self.one_line)
        object.__setattr__(self, "one_line", values)
        n = len(values)
        if sorted(values) != list(range(1, n + 1)):
            raise PermutationError(
                f"{list(values)} is not a permutation of [{n}]",
                invariant="bijection",
            )

    # ─── constructors ───

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], n: Optional[int] = None) -> "Permutation":
        """
        Build from cycles (x, pi(x), pi^2(x), ...); omitted values are fixed.

        Args:
            cycles: Disjoint cycles of positive integers
            n: Size; defaults to the largest value mentioned
        """
        seen: set = set()
        for cycle in cycles:
            for v in cycle:
                if v < 1:
                    raise PermutationError(f"Value {v} out of range", invariant="range")
                if v in seen:
                    raise PermutationError(f"Value {v} repeated in cycle notation", invariant="bijection")
                seen.add(v)
        size = max(seen, default=0) if n is None else n
        if seen and max(seen) > size:
            raise PermutationError(f"Value {max(seen)} exceeds n={size}", invariant="range")
        mapping = list(range(1, size + 1))
        for cycle in cycles:
            for i, v in enumerate(cycle):
                mapping[v - 1] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(mapping))

    # ─── basic structure ───

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __len__(self) -> int:
        return len(self.one_line)

    def __call__(self, value: int) -> int:
        return self.one_line[value - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.one_line, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """(self o other)(x) = self(other(x))."""
        if other.n != self.n:
            raise PermutationError(f"Cannot compose sizes {self.n} and {other.n}")
        return Permutation(tuple(self(other(x)) for x in range(1, self.n + 1)))

    def cycles(self) -> Tuple[Cycle, ...]:
        """Cycles starting at their smallest element, by increasing start."""
        if self._cycles is None:
            remaining = set(self.one_line)
            found = []
            for start in range(1, self.n + 1):
                if start not in remaining:
                    continue
                cycle = [start]
                remaining.discard(start)
                current = self(start)
                while current != start:
                    cycle.append(current)
                    remaining.discard(current)
                    current = self(current)
                found.append(tuple(cycle))
            object.__setattr__(self, "_cycles", tuple(found))
        return self._cycles

    def cycle_form(self, policy: CyclePolicy = CyclePolicy.SMALLEST_FIRST_DESCENDING) -> CycleForm:
        rotated = []
        for cycle in self.cycles():
            anchor = max(cycle) if policy is CyclePolicy.LARGEST_FIRST_ASCENDING else min(cycle)
            i = cycle.index(anchor)
            rotated.append(cycle[i:] + cycle[:i])
        reverse = policy is CyclePolicy.SMALLEST_FIRST_DESCENDING
        rotated.sort(key=lambda c: c[0], reverse=reverse)
        return CycleForm(tuple(rotated), policy)

    def cycle_type(self) -> Tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    # ─── statistics ───

    def boundary_sets(self) -> BoundarySets:
        return boundary_sets(self)

    @property
    def descents(self) -> FrozenSet[int]:
        return frozenset(i for i in range(1, self.n) if self.one_line[i - 1] > self.one_line[i])

    @property
    def ascents(self) -> FrozenSet[int]:
        return frozenset(i for i in range(1, self.n) if self.one_line[i - 1] < self.one_line[i])

    def parity_class(self) -> "ParityClass":
        return classify_parity(self)

    # ─── rendering ───

    def one_line_text(self) -> str:
        if self.n <= 9:
            return "".join(str(v) for v in self.one_line)
        return " ".join(str(v) for v in self.one_line)

    def __str__(self) -> str:
        return self.one_line_text()

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "one_line": list(self.one_line),
            "cycles": str(self.cycle_form()),
        }


def boundary_sets(pi: Permutation) -> BoundarySets:
    """Des(pi) = {i : pi_i > pi_{i+1}} and its complement Asc(pi) in [n-1]."""
    return BoundarySets(n=pi.n, descents=pi.descents, ascents=pi.ascents)


def classify_parity(pi: Permutation) -> ParityClass:
    lengths = [len(c) for c in pi.cycles()]
    all_odd = all(length % 2 == 1 for length in lengths)
    odd_lengths = [length for length in lengths if length % 2 == 1]
    even_class = len(odd_lengths) == 0 or odd_lengths == [1]
    if all_odd and even_class:
        return ParityClass.BOTH
    if all_odd:
        return ParityClass.ODD_CYCLES
    if even_class:
        return ParityClass.EVEN_CYCLES
    return ParityClass.NEITHER


def all_permutations(n: int) -> Iterator[Permutation]:
    """S_n in lexicographic order of one-line notation."""
    for values in itertools.permutations(range(1, n + 1)):
        yield Permutation(values)


# ═══════════════════════════════════════════════════════════════════════════
#                               CODEC
# ═══════════════════════════════════════════════════════════════════════════

_CYCLE_TEXT = re.compile(r"\s*(\([^()]*\)\s*)+")
_CYCLE_GROUP = re.compile(r"\(([^()]*)\)")
_SEPARATORS = re.compile(r"[\s,]+")


def _parse_values(text: str) -> List[int]:
    tokens = [t for t in _SEPARATORS.split(text.strip()) if t]
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise PermutationError(f"Non-integer entry in {text!r}", invariant="syntax")


def parse_permutation(text: str, n: Optional[int] = None) -> Permutation:
    """
    Parse cycle notation "(3,6)(2,5)(1,4,7,8)" or one-line notation.

    One-line text may be separated by spaces or commas ("4 5 6 7 2 3 8 1");
    a single run of digits ("45672381") is read one digit per value.
    In cycle notation omitted values are fixed points and ``n`` defaults to
    the largest value mentioned.
    """
    text = text.strip()
    if not text:
        raise PermutationError("Empty permutation text", invariant="syntax")

    if text.startswith("("):
        if not _CYCLE_TEXT.fullmatch(text):
            raise PermutationError(f"Malformed cycle notation {text!r}", invariant="syntax")
        cycles = [_parse_values(group) for group in _CYCLE_GROUP.findall(text)]
        if any(not c for c in cycles):
            raise PermutationError(f"Empty cycle in {text!r}", invariant="syntax")
        return Permutation.from_cycles(cycles, n)

    if text.isdigit() and len(text) > 1:
        values = [int(ch) for ch in text]
    else:
        values = _parse_values(text)
    if n is not None and len(values) != n:
        raise PermutationError(f"Expected {n} values, got {len(values)}", invariant="range")
    if any(v < 1 or v > len(values) for v in values):
        raise PermutationError(
            f"Values of {text!r} must lie in [1, {len(values)}]",
            invariant="range",
        )
    return Permutation(tuple(values))


def format_permutation(pi: Permutation, style: str = "cycles") -> str:
    if style == "cycles":
        return str(pi.cycle_form(CyclePolicy.SMALLEST_FIRST_DESCENDING))
    if style == "one-line":
        return pi.one_line_text()
    raise PermutationError(f"Unknown permutation style {style!r}")

