"""
Errors
======
Structured exceptions raised by the word, permutation and bijection modules.

All of them derive from ``ValueError`` so callers that only care about bad
input can keep catching that; the ``invariant`` tag names the condition that
was violated (e.g. ``"repeated-odd-factor"``).
"""

from typing import Optional


class CombinatoricsError(ValueError):
    """Base class for every error raised by this package."""

    def __init__(self, message: str, invariant: Optional[str] = None):
        super().__init__(message)
        self.message = message
        self.invariant = invariant

    def to_dict(self) -> dict:
        return {
            "error": type(self).__name__,
            "message": self.message,
            "invariant": self.invariant,
        }


class AlphabetError(CombinatoricsError):
    """Letter outside the alphabet, or alphabet too large for text mode."""


class EmptyWordError(CombinatoricsError):
    """Operation needs a nonempty word."""


class NotLyndonError(CombinatoricsError):
    """Operation needs a Lyndon word (of some minimum length)."""


class IsfTerminationError(CombinatoricsError):
    """Iterated standard factorization ran out of letters before stopping."""


class PermutationError(CombinatoricsError):
    """Malformed permutation text, or values that are not a bijection on [n]."""


class PreconditionError(CombinatoricsError):
    """Descent/ascent/parity precondition of a map does not hold."""


class WordClassError(CombinatoricsError):
    """Word lies outside the class a bijection is defined on."""


class NecklaceError(CombinatoricsError):
    """Necklace multiset has a non-primitive, repeated or even member."""


class WeightMismatchError(CombinatoricsError):
    """Weight of a multiset does not match the composition of S."""


class ParameterMismatchError(CombinatoricsError):
    """Truncated polynomials with different variable count or degree cap."""


class BudgetExceededError(CombinatoricsError):
    """Exhaustive enumeration would exceed the configured desk-scale budget."""


class InvariantViolation(CombinatoricsError):
    """A per-step property of the bijections failed."""
