"""
Truncated Polynomials
=====================
Multivariate integer power series in x_1..x_k truncated at total degree D.

Coefficients are stored sparsely in a dict keyed by the full exponent
vector; zero coefficients are never stored, so two series are equal
exactly when their dicts are.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Tuple

from ..errors import ParameterMismatchError
from ..words.core import Word, weight


logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class TruncatedPolynomial:
    """
    Sum of c_a x^a over exponent vectors a with |a| <= degree.
    """
    k: int
    degree: int
    terms: Dict[Exponent, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.k < 1 or self.degree < 0:
            raise ParameterMismatchError(
                f"Need k >= 1 and degree >= 0, got k={self.k}, degree={self.degree}"
            )
        cleaned = {}
        for exponent, coefficient in self.terms.items():
            exponent = tuple(exponent)
            if len(exponent) != self.k:
                raise ParameterMismatchError(
                    f"Exponent {exponent} has {len(exponent)} entries, expected {self.k}",
                    invariant="variable-count",
                )
            if coefficient and sum(exponent) <= self.degree:
                cleaned[exponent] = int(coefficient)
        object.__setattr__(self, "terms", cleaned)

    # ─── constructors ───

    @classmethod
    def zero(cls, k: int, degree: int) -> "TruncatedPolynomial":
        return cls(k, degree, {})

    @classmethod
    def one(cls, k: int, degree: int) -> "TruncatedPolynomial":
        return cls.monomial(k, degree, (0,) * k)

    @classmethod
    def monomial(cls, k: int, degree: int, exponent: Exponent, coefficient: int = 1) -> "TruncatedPolynomial":
        return cls(k, degree, {tuple(exponent): coefficient})

    @classmethod
    def variable(cls, k: int, degree: int, index: int) -> "TruncatedPolynomial":
        """x_{index+1} (0-based letter rank)."""
        exponent = [0] * k
        exponent[index] = 1
        return cls.monomial(k, degree, tuple(exponent))

    @classmethod
    def of_word(cls, k: int, degree: int, word: Word, coefficient: int = 1) -> "TruncatedPolynomial":
        """coefficient * wt(word)."""
        return cls.monomial(k, degree, weight(word, k), coefficient)

    @classmethod
    def geometric(cls, k: int, degree: int, exponent: Exponent) -> "TruncatedPolynomial":
        """(1 - x^a)^{-1} = 1 + x^a + x^{2a} + ... truncated."""
        step = sum(exponent)
        if step == 0:
            raise ParameterMismatchError("Geometric series of a constant term diverges")
        terms = {}
        for power in range(degree // step + 1):
            terms[tuple(power * e for e in exponent)] = 1
        return cls(k, degree, terms)

    # ─── arithmetic ───

    def _check(self, other: "TruncatedPolynomial"):
        if (self.k, self.degree) != (other.k, other.degree):
            raise ParameterMismatchError(
                f"Cannot combine (k={self.k}, D={self.degree}) with (k={other.k}, D={other.degree})",
                invariant="same-parameters",
            )

    def __add__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        self._check(other)
        terms = dict(self.terms)
        for exponent, coefficient in other.terms.items():
            terms[exponent] = terms.get(exponent, 0) + coefficient
        return TruncatedPolynomial(self.k, self.degree, terms)

    def __neg__(self) -> "TruncatedPolynomial":
        return TruncatedPolynomial(self.k, self.degree, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        return self + -other

    def __mul__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        return truncated_product(self, other)

    def negate_variables(self) -> "TruncatedPolynomial":
        """Substitute x_i -> -x_i for every i."""
        return TruncatedPolynomial(
            self.k,
            self.degree,
            {e: (-c if sum(e) % 2 else c) for e, c in self.terms.items()},
        )

    # ─── inspection ───

    def coefficient(self, exponent: Exponent) -> int:
        return self.terms.get(tuple(exponent), 0)

    def homogeneous_part(self, total: int) -> Dict[Exponent, int]:
        return {e: c for e, c in self.terms.items() if sum(e) == total}

    def first_difference(self, other: "TruncatedPolynomial") -> Optional[Tuple[Exponent, int, int]]:
        """Smallest (by degree, then exponent) term where the two differ."""
        self._check(other)
        exponents = sorted(set(self.terms) | set(other.terms), key=lambda e: (sum(e), e))
        for exponent in exponents:
            left, right = self.coefficient(exponent), other.coefficient(exponent)
            if left != right:
                return exponent, left, right
        return None

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exponent in sorted(self.terms, key=lambda e: (sum(e), tuple(-x for x in e))):
            coefficient = self.terms[exponent]
            factors = [
                f"x{i + 1}" + (f"^{p}" if p > 1 else "")
                for i, p in enumerate(exponent) if p
            ]
            body = "*".join(factors)
            if not body:
                parts.append(str(coefficient))
            elif coefficient == 1:
                parts.append(body)
            elif coefficient == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{coefficient}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.render()

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "degree": self.degree,
            "terms": {",".join(map(str, e)): c for e, c in sorted(self.terms.items())},
        }


def truncated_product(p: TruncatedPolynomial, q: TruncatedPolynomial) -> TruncatedPolynomial:
    """Exact product, dropping every term of total degree above D."""
    p._check(q)
    terms: Dict[Exponent, int] = {}
    for e1, c1 in p.terms.items():
        d1 = sum(e1)
        for e2, c2 in q.terms.items():
            if d1 + sum(e2) > p.degree:
                continue
            exponent = tuple(a + b for a, b in zip(e1, e2))
            terms[exponent] = terms.get(exponent, 0) + c1 * c2
    return TruncatedPolynomial(p.k, p.degree, terms)


def product(factors: Iterable[TruncatedPolynomial], k: int, degree: int) -> TruncatedPolynomial:
    result = TruncatedPolynomial.one(k, degree)
    for factor in factors:
        result = truncated_product(result, factor)
    return result


def linear_sum(k: int, degree: int, constant: int = 1, sign: int = 1) -> TruncatedPolynomial:
    """constant + sign * (x_1 + ... + x_k)."""
    terms: Dict[Exponent, int] = {(0,) * k: constant}
    for i in range(k):
        exponent = [0] * k
        exponent[i] = 1
        terms[tuple(exponent)] = sign
    return TruncatedPolynomial(k, degree, terms)
