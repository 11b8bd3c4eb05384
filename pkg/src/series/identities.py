"""
Generating Function Identities
==============================
Checks of the Lyndon-factor product identities through a fixed degree, and
the brute-force word-class counts they are compared against.

Lyndon words longer than D cannot contribute to terms of degree <= D, so
every product below ranges over the finitely many Lyndon words of length
at most D.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..bijection.parity import classify_word
from ..config import get_config
from ..errors import BudgetExceededError
from ..words.core import Alphabet, WeightVector, weight
from ..words.lyndon import enumerate_lyndon_words, is_even, is_odd
from .polynomial import (
    Exponent,
    TruncatedPolynomial,
    linear_sum,
    product,
    truncated_product,
)


logger = logging.getLogger(__name__)


@dataclass
class IdentityReport:
    """Outcome of comparing two truncated series."""
    name: str
    k: int
    degree: int
    left: TruncatedPolynomial
    right: TruncatedPolynomial
    first_difference: Optional[Tuple[Exponent, int, int]] = field(init=False)

    def __post_init__(self):
        self.first_difference = self.left.first_difference(self.right)

    @property
    def passed(self) -> bool:
        return self.first_difference is None

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status}  {self.name}  k={self.k} D={self.degree}  terms={len(self.left.terms)}"
        if self.first_difference is not None:
            exponent, left, right = self.first_difference
            line += f"  first difference at x^{exponent}: {left} != {right}"
        return line

    def render(self) -> str:
        return self.summary()

    def to_dict(self) -> dict:
        difference = None
        if self.first_difference is not None:
            exponent, left, right = self.first_difference
            difference = {"exponent": list(exponent), "left": left, "right": right}
        return {
            "name": self.name,
            "k": self.k,
            "degree": self.degree,
            "passed": self.passed,
            "left": self.left.render(),
            "right": self.right.render(),
            "first_difference": difference,
        }


# ═══════════════════════════════════════════════════════════════════════════
#                           LYNDON PRODUCTS
# ═══════════════════════════════════════════════════════════════════════════

def odd_lyndon_product(k: int, degree: int) -> TruncatedPolynomial:
    """prod over odd Lyndon l of (1 + wt(l))."""
    one = TruncatedPolynomial.one(k, degree)
    return product(
        (one + TruncatedPolynomial.of_word(k, degree, w)
         for w in enumerate_lyndon_words(k, degree) if is_odd(w)),
        k, degree,
    )


def even_lyndon_product(k: int, degree: int, reciprocal: bool = False) -> TruncatedPolynomial:
    """prod over even Lyndon l of (1 - wt(l)), or of 1/(1 - wt(l))."""
    one = TruncatedPolynomial.one(k, degree)
    words = [w for w in enumerate_lyndon_words(k, degree) if is_even(w)]
    if reciprocal:
        factors = (TruncatedPolynomial.geometric(k, degree, weight(w, k)) for w in words)
    else:
        factors = (one - TruncatedPolynomial.of_word(k, degree, w) for w in words)
    return product(factors, k, degree)


def verify_gf_identity(k: int, degree: int) -> IdentityReport:
    """prod_odd (1 + wt) * prod_even (1 - wt) = 1 + x_1 + ... + x_k."""
    left = truncated_product(odd_lyndon_product(k, degree), even_lyndon_product(k, degree))
    report = IdentityReport("lyndon-parity-product", k, degree, left, linear_sum(k, degree))
    logger.info(report.summary())
    return report


# ═══════════════════════════════════════════════════════════════════════════
#                         WORD-CLASS COUNTING
# ═══════════════════════════════════════════════════════════════════════════

@dataclass
class WordClassCounts:
    """Number of words of each weight in W^o_n and W^e_n."""
    k: int
    n: int
    odd: Dict[WeightVector, int]
    even: Dict[WeightVector, int]

    @property
    def balanced(self) -> bool:
        return self.odd == self.even

    def to_dict(self) -> dict:
        weights = sorted(set(self.odd) | set(self.even), reverse=True)
        return {
            "k": self.k,
            "n": self.n,
            "balanced": self.balanced,
            "rows": [
                {"weight": list(w), "odd": self.odd.get(w, 0), "even": self.even.get(w, 0)}
                for w in weights
            ],
        }


def _check_word_budget(k: int, n: int):
    budget = get_config().verification.max_word_enumeration
    if k ** n > budget:
        logger.error(f"Refusing to enumerate {k}^{n} words (budget {budget})")
        raise BudgetExceededError(
            f"{k}^{n} = {k ** n} words exceeds the enumeration budget {budget}",
            invariant="word-budget",
        )


def count_word_classes(k: int, n: int) -> WordClassCounts:
    """Brute force over all k^n words, bucketed by class and weight."""
    _check_word_budget(k, n)
    odd: Dict[WeightVector, int] = {}
    even: Dict[WeightVector, int] = {}
    for word in Alphabet(k).words(n):
        word_class = classify_word(word)
        key = weight(word, k)
        if word_class.is_odd:
            odd[key] = odd.get(key, 0) + 1
        if word_class.is_even:
            even[key] = even.get(key, 0) + 1
    return WordClassCounts(k, n, odd, even)


def _odd_side(k: int, degree: int) -> TruncatedPolynomial:
    return odd_lyndon_product(k, degree)


def _even_side(k: int, degree: int) -> TruncatedPolynomial:
    return truncated_product(linear_sum(k, degree), even_lyndon_product(k, degree, reciprocal=True))


def series_class_counts(k: int, n: int) -> WordClassCounts:
    """The same buckets read off as degree-n coefficients of the two series."""
    odd = _odd_side(k, n).homogeneous_part(n)
    even = _even_side(k, n).homogeneous_part(n)
    return WordClassCounts(k, n, odd, even)


def _word_series(k: int, degree: int, which: str) -> TruncatedPolynomial:
    terms: Dict[Exponent, int] = {}
    for n in range(degree + 1):
        counts = count_word_classes(k, n)
        terms.update(getattr(counts, which))
    return TruncatedPolynomial(k, degree, terms)


def verify_parity_series(k: int, degree: int) -> List[IdentityReport]:
    """
    Both generating functions against brute-force word counts:

    sum over W^o of wt(w) = prod_odd (1 + wt(l)), and
    sum over W^e of wt(w) = (1 + x_1 + ... + x_k) prod_even 1/(1 - wt(l)).
    """
    reports = [
        IdentityReport("odd-distinct-words", k, degree, _word_series(k, degree, "odd"), _odd_side(k, degree)),
        IdentityReport("even-class-words", k, degree, _word_series(k, degree, "even"), _even_side(k, degree)),
    ]
    for report in reports:
        logger.info(report.summary())
    return reports


def verify_substitution_symmetry(k: int, degree: int) -> List[IdentityReport]:
    """
    The sign-flip argument: negating every variable in
    prod_odd (1 + wt) prod_even (1 - wt) gives prod over all Lyndon words of
    (1 - wt), which equals 1 - x_1 - ... - x_k; its reciprocal
    prod 1/(1 - wt) equals 1/(1 - x_1 - ... - x_k) = sum over all words.
    """
    one = TruncatedPolynomial.one(k, degree)
    lyndon = list(enumerate_lyndon_words(k, degree))

    mixed = truncated_product(odd_lyndon_product(k, degree), even_lyndon_product(k, degree))
    all_minus = product((one - TruncatedPolynomial.of_word(k, degree, w) for w in lyndon), k, degree)
    all_geometric = product(
        (TruncatedPolynomial.geometric(k, degree, weight(w, k)) for w in lyndon), k, degree
    )

    # 1/(1 - L) = 1 + L + L^2 + ... with L = x_1 + ... + x_k
    variables = linear_sum(k, degree, constant=0)
    power, all_words = one, one
    for _ in range(degree):
        power = truncated_product(power, variables)
        all_words = all_words + power

    reports = [
        IdentityReport("negated-variables", k, degree, mixed.negate_variables(), all_minus),
        IdentityReport("all-lyndon-minus", k, degree, all_minus, linear_sum(k, degree, sign=-1)),
        IdentityReport("all-lyndon-reciprocal", k, degree, all_geometric, all_words),
    ]
    for report in reports:
        logger.info(report.summary())
    return reports
