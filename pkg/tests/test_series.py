"""
Tests for truncated polynomials and the Lyndon-factor product identities.
"""

import pytest
import sympy

from src.errors import BudgetExceededError, ParameterMismatchError
from src.series.identities import (
    count_word_classes,
    even_lyndon_product,
    odd_lyndon_product,
    series_class_counts,
    verify_gf_identity,
    verify_parity_series,
    verify_substitution_symmetry,
)
from src.series.polynomial import TruncatedPolynomial, linear_sum, truncated_product
from src.words.core import weight
from src.words.lyndon import enumerate_lyndon_words, is_odd
from tests.conftest import w


class TestTruncatedPolynomial:
    """Arithmetic modulo total degree > D."""

    @pytest.mark.unit
    def test_product_drops_high_degree(self):
        x = TruncatedPolynomial.variable(2, 2, 0)
        y = TruncatedPolynomial.variable(2, 2, 1)
        square = truncated_product(x + y, x + y)
        assert square.terms == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
        assert truncated_product(square, x).terms == {}

    @pytest.mark.unit
    def test_geometric(self):
        series = TruncatedPolynomial.geometric(2, 5, (1, 1))
        assert series.terms == {(0, 0): 1, (1, 1): 1, (2, 2): 1}
        one_minus = TruncatedPolynomial.one(2, 5) - TruncatedPolynomial.monomial(2, 5, (1, 1))
        assert (series * one_minus) == TruncatedPolynomial.one(2, 5)

    @pytest.mark.unit
    def test_negate_variables(self):
        p = linear_sum(2, 3)
        assert p.negate_variables() == linear_sum(2, 3, sign=-1)

    @pytest.mark.unit
    def test_of_word(self):
        assert TruncatedPolynomial.of_word(3, 4, w("abac")).terms == {(2, 1, 1): 1}
        assert TruncatedPolynomial.of_word(3, 3, w("abac")).terms == {}

    @pytest.mark.unit
    def test_render(self):
        assert linear_sum(2, 3).render() == "1 + x1 + x2"
        assert linear_sum(2, 3, sign=-1).render() == "1 - x1 - x2"
        assert TruncatedPolynomial.zero(2, 3).render() == "0"

    @pytest.mark.unit
    def test_mismatched_parameters(self):
        with pytest.raises(ParameterMismatchError):
            linear_sum(2, 3) + linear_sum(3, 3)
        with pytest.raises(ParameterMismatchError):
            linear_sum(2, 3) * linear_sum(2, 4)
        with pytest.raises(ParameterMismatchError):
            TruncatedPolynomial(2, 3, {(1,): 1})

    @pytest.mark.unit
    def test_first_difference(self):
        p = linear_sum(2, 3)
        q = linear_sum(2, 3, sign=-1)
        assert p.first_difference(q) == ((0, 1), 1, -1)
        assert p.first_difference(p) is None


class TestGeneratingFunctionIdentity:
    """prod_odd (1 + wt) prod_even (1 - wt) = 1 + x_1 + ... + x_k."""

    @pytest.mark.unit
    @pytest.mark.parametrize("k, degree", [(1, 6), (2, 8), (3, 6)])
    def test_identity(self, k, degree):
        report = verify_gf_identity(k, degree)
        assert report.passed, report.summary()
        assert report.to_dict()["first_difference"] is None

    @pytest.mark.slow
    @pytest.mark.parametrize("degree", [7, 8])
    def test_identity_three_letters_high_degree(self, degree):
        assert verify_gf_identity(3, degree).passed

    @pytest.mark.slow
    def test_identity_four_letters(self):
        assert verify_gf_identity(4, 7).passed

    @pytest.mark.unit
    def test_agrees_with_sympy_expansion(self):
        k, degree = 2, 5
        x = sympy.symbols(f"x1:{k + 1}")
        expr = sympy.Integer(1)
        for word in enumerate_lyndon_words(k, degree):
            monomial = sympy.Mul(*(v ** e for v, e in zip(x, weight(word, k))))
            expr *= (1 + monomial) if is_odd(word) else (1 - monomial)
        poly = sympy.Poly(sympy.expand(expr), *x)
        expected = {m: int(c) for m, c in poly.terms() if sum(m) <= degree}
        ours = truncated_product(odd_lyndon_product(k, degree), even_lyndon_product(k, degree))
        assert ours.terms == expected


class TestParitySeries:
    """Each class's generating function against brute-force counts."""

    @pytest.mark.unit
    @pytest.mark.parametrize("k, degree", [(2, 6), (3, 4)])
    def test_series_match_counts(self, k, degree):
        reports = verify_parity_series(k, degree)
        assert [r.name for r in reports] == ["odd-distinct-words", "even-class-words"]
        assert all(r.passed for r in reports)

    @pytest.mark.slow
    @pytest.mark.parametrize("k, degree", [(2, 8), (3, 6)])
    def test_series_match_counts_larger(self, k, degree):
        assert all(r.passed for r in verify_parity_series(k, degree))

    @pytest.mark.unit
    @pytest.mark.parametrize("k, degree", [(2, 6), (3, 5)])
    def test_substitution_symmetry(self, k, degree):
        assert all(r.passed for r in verify_substitution_symmetry(k, degree))


class TestWordClassCounts:
    """Per-weight counts of W^o_n and W^e_n."""

    @pytest.mark.unit
    def test_small_counts(self):
        counts = count_word_classes(2, 3)
        assert counts.odd == {(2, 1): 1, (1, 2): 1}
        assert counts.even == {(2, 1): 1, (1, 2): 1}
        assert counts.balanced

    @pytest.mark.unit
    def test_series_counts_agree(self):
        for k, n in [(2, 5), (3, 4)]:
            brute = count_word_classes(k, n)
            series = series_class_counts(k, n)
            assert brute.odd == series.odd
            assert brute.even == series.even
            assert brute.balanced

    @pytest.mark.slow
    @pytest.mark.parametrize("k, n", [(2, 6), (2, 7), (2, 8), (3, 5), (3, 6)])
    def test_series_counts_agree_larger(self, k, n):
        brute = count_word_classes(k, n)
        series = series_class_counts(k, n)
        assert (brute.odd, brute.even) == (series.odd, series.even)
        assert brute.balanced

    @pytest.mark.unit
    def test_to_dict(self):
        rows = count_word_classes(2, 2).to_dict()["rows"]
        assert rows == [{"weight": [1, 1], "odd": 1, "even": 1}]

    @pytest.mark.unit
    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            count_word_classes(4, 10)
