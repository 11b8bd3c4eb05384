"""
Tests for Lyndon words, factorizations and the iterated standard factorization.
"""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.errors import EmptyWordError, IsfTerminationError, NotLyndonError
from src.words.core import INFINITY, format_word, precedes
from src.words.lyndon import (
    enumerate_lyndon_words,
    factor_starts_via_suffix_minima,
    factors_or_empty,
    is_lyndon,
    is_even,
    is_odd,
    isf,
    lyndon_factorize,
    smallest_proper_suffix,
    standard_factorization,
)
from tests.conftest import w


nonempty_k3 = st.lists(st.integers(min_value=0, max_value=2), min_size=1, max_size=12).map(tuple)


class TestLyndonPredicate:
    """Lyndon words are strictly smaller than all their proper suffixes."""

    @pytest.mark.unit
    @pytest.mark.parametrize("text", ["a", "ab", "aab", "aabc", "acb", "adccdbccc", "abacabc"])
    def test_lyndon(self, text):
        assert is_lyndon(w(text))

    @pytest.mark.unit
    @pytest.mark.parametrize("text", ["", "ba", "abab", "aa", "aba"])
    def test_not_lyndon(self, text):
        assert not is_lyndon(w(text))

    @pytest.mark.unit
    def test_enumeration_matches_predicate(self):
        expected = sorted(
            word
            for n in range(1, 6)
            for word in itertools.product(range(3), repeat=n)
            if is_lyndon(word)
        )
        assert list(enumerate_lyndon_words(3, 5)) == expected

    @pytest.mark.unit
    def test_enumeration_counts(self):
        # necklace polynomial: 2, 1, 2, 3, 6 binary Lyndon words of length 1..5
        lengths = [len(x) for x in enumerate_lyndon_words(2, 5)]
        assert [lengths.count(n) for n in range(1, 6)] == [2, 1, 2, 3, 6]


class TestFactorization:
    """Duval factorization and the suffix-minima characterization."""

    @pytest.mark.unit
    def test_worked_factorization(self):
        factorization = lyndon_factorize(w("dadccdbccc"))
        assert factorization.render() == "d|adccdbccc"
        assert factorization.starts == [1, 2]
        assert factorization.lengths == [1, 9]

    @pytest.mark.unit
    def test_longer_factorization(self):
        assert str(lyndon_factorize(w("ddecedbdbdccdabda"))) == "dde|ced|bdbdccd|abd|a"
        assert str(lyndon_factorize(w("cba"))) == "c|b|a"

    @pytest.mark.unit
    def test_empty_word(self):
        with pytest.raises(EmptyWordError):
            lyndon_factorize(())
        assert factors_or_empty(()) == ()

    @pytest.mark.unit
    def test_suffix_minima(self):
        assert factor_starts_via_suffix_minima(w("dadccdbccc")) == [1, 2]
        assert factor_starts_via_suffix_minima(w("abc")) == [1]
        assert factor_starts_via_suffix_minima(w("cba")) == [1, 2, 3]

    @pytest.mark.unit
    @given(nonempty_k3)
    def test_factors_are_weakly_decreasing_lyndon(self, word):
        factors = lyndon_factorize(word).factors
        assert sum(factors, ()) == word
        assert all(is_lyndon(f) for f in factors)
        assert all(a >= b for a, b in zip(factors, factors[1:]))

    @pytest.mark.slow
    def test_duval_agrees_with_suffix_minima(self):
        for n in range(1, 11):
            for word in itertools.product(range(3), repeat=n):
                assert lyndon_factorize(word).starts == factor_starts_via_suffix_minima(word)


class TestStandardFactorization:
    """l = r s with s the smallest proper suffix."""

    @pytest.mark.unit
    @pytest.mark.parametrize("text, r, s", [
        ("adccdbccc", "adccd", "bccc"),
        ("abacabc", "abac", "abc"),
        ("ab", "a", "b"),
        ("aabb", "a", "abb"),
    ])
    def test_worked_examples(self, text, r, s):
        split = standard_factorization(w(text))
        assert (format_word(split.r), format_word(split.s)) == (r, s)
        assert split.word == w(text)

    @pytest.mark.unit
    def test_render(self):
        assert standard_factorization(w("adccdbccc")).render() == "adccd!bccc"

    @pytest.mark.unit
    def test_rejects_short_or_non_lyndon(self):
        with pytest.raises(NotLyndonError):
            standard_factorization(w("a"))
        with pytest.raises(NotLyndonError):
            standard_factorization(w("ba"))
        with pytest.raises(NotLyndonError):
            smallest_proper_suffix(w("a"))

    @pytest.mark.unit
    def test_both_halves_are_lyndon(self):
        for word in enumerate_lyndon_words(3, 7):
            if len(word) < 2:
                continue
            split = standard_factorization(word)
            assert is_lyndon(split.r) and is_lyndon(split.s)
            assert split.r < word < split.s


class TestIteratedStandardFactorization:
    """ISF with respect to a reference word or infinity."""

    @pytest.mark.unit
    @pytest.mark.parametrize("text, reference, expected", [
        ("adbccc", "ccd", "a!d!bccc"),
        ("ccedcd", "dde", "c!ced!cd"),
        ("adcdbcdcbcbc", "c", "ad!cd!bcdc!bc!bc"),
    ])
    def test_worked_examples(self, text, reference, expected):
        assert isf(w(text), w(reference)).render() == expected

    @pytest.mark.unit
    def test_with_respect_to_infinity(self):
        decomposition = isf(w("adcdbcdcbcbc"), INFINITY)
        assert decomposition.render() == "a!d!cd!bcdc!bc!bc"
        assert decomposition.depth == 5
        assert decomposition.last_suffix == w("d")
        assert decomposition.word == w("adcdbcdcbcbc")

    @pytest.mark.unit
    def test_default_reference_is_infinity(self):
        assert isf(w("adcdbcdcbcbc")) == isf(w("adcdbcdcbcbc"), INFINITY)

    @pytest.mark.unit
    def test_stops_at_suffix_not_below_reference(self):
        decomposition = isf(w("abc"), w("b"))
        assert decomposition.head == w("a")
        assert decomposition.tail == (w("bc"),)

    @pytest.mark.unit
    def test_runs_out_of_letters(self):
        # bc is even and below infinity, leaving the single letter a
        with pytest.raises(IsfTerminationError):
            isf(w("abc"), INFINITY)

    @pytest.mark.unit
    def test_stops_at_odd_suffix(self):
        decomposition = isf(w("abb"), INFINITY)
        assert decomposition.head == w("ab")
        assert decomposition.tail == (w("b"),)


def _words_up_to(k: int, max_len: int, min_len: int = 0):
    for n in range(min_len, max_len + 1):
        yield from itertools.product(range(k), repeat=n)


def _proper_lyndon(k: int, max_len: int):
    return [word for word in enumerate_lyndon_words(k, max_len) if len(word) >= 2]


class TestLyndonProperties:
    """Exhaustive checks of the order facts the bijection relies on."""

    @pytest.mark.unit
    def test_smallest_suffix_is_longest_lyndon_suffix(self):
        for word in _proper_lyndon(3, 8):
            lyndon_suffixes = [word[i:] for i in range(1, len(word)) if is_lyndon(word[i:])]
            assert standard_factorization(word).s == max(lyndon_suffixes, key=len)

    @pytest.mark.unit
    @pytest.mark.parametrize("k, max_len", [(2, 8), (3, 6)])
    def test_concatenation_is_standard_iff_bounded_by_s(self, k, max_len):
        lyndon = list(enumerate_lyndon_words(k, max_len))
        checked = 0
        for head in lyndon:
            if len(head) < 2:
                continue
            s = standard_factorization(head).s
            for t in lyndon:
                if not precedes(head, t) or len(head) + len(t) > max_len:
                    continue
                split = standard_factorization(head + t)
                assert ((split.r, split.s) == (head, t)) == (not precedes(s, t)), (head, t)
                checked += 1
        assert checked > 0

    @pytest.mark.unit
    def test_small_prefix_keeps_concatenation_below(self):
        words = list(_words_up_to(2, 4))
        prefixes = list(_words_up_to(2, 4, min_len=1))
        for ell in enumerate_lyndon_words(2, 5):
            for u in prefixes:
                if not precedes(u, ell):
                    continue
                for v in words:
                    if not precedes(ell, v):
                        assert precedes(u + v, ell), (ell, u, v)

    @pytest.mark.unit
    @given(
        st.sampled_from(list(enumerate_lyndon_words(3, 6))),
        nonempty_k3,
        nonempty_k3,
    )
    def test_small_prefix_keeps_concatenation_below_random(self, ell, u, v):
        if precedes(u, ell) and not precedes(ell, v):
            assert precedes(u + v, ell)


class TestIsfChain:
    """r_j < l < s_1 <= ... <= s_j and the stop rule, for every reference."""

    def _check(self, ell, reference):
        decomposition = isf(ell, reference)
        assert decomposition.word == ell
        assert precedes(decomposition.head, ell)
        assert precedes(ell, decomposition.tail[-1])
        for later, earlier in zip(decomposition.tail, decomposition.tail[1:]):
            assert not precedes(later, earlier)
        for s in decomposition.remaining:
            assert is_even(s) and precedes(s, reference)
        last = decomposition.last_suffix
        assert is_odd(last) or not precedes(last, reference)

    @pytest.mark.unit
    def test_binary_even_words(self):
        references = list(_words_up_to(2, 4)) + [INFINITY]
        for ell in _proper_lyndon(2, 10):
            if is_even(ell):
                for reference in references:
                    self._check(ell, reference)

    @pytest.mark.slow
    def test_ternary_even_words(self):
        references = list(_words_up_to(3, 4)) + [INFINITY]
        for ell in _proper_lyndon(3, 8):
            if is_even(ell):
                for reference in references:
                    self._check(ell, reference)

    @pytest.mark.unit
    def test_odd_words_chain_or_terminate(self):
        for ell in _proper_lyndon(2, 7):
            if not is_odd(ell):
                continue
            for reference in list(_words_up_to(2, 3)) + [INFINITY]:
                try:
                    self._check(ell, reference)
                except IsfTerminationError:
                    pass
