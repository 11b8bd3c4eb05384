"""
Tests for permutations, cycle parity classes and the comparison maps.
"""

import pytest

from src.errors import PermutationError, PreconditionError
from src.necklaces.maps import SubsetS, all_subsets, word_of_inverse
from src.perms.maps import (
    bona_map,
    costandard_permutation,
    foata_hat,
    foata_hat_inverse,
    left_to_right_minima,
    standard_permutation,
)
from src.perms.permutation import (
    CyclePolicy,
    ParityClass,
    Permutation,
    all_permutations,
    classify_parity,
    format_permutation,
    parse_permutation,
)
from tests.conftest import w


class TestPermutationBasics:
    """Construction, cycles and statistics."""

    @pytest.mark.unit
    def test_cycles_to_one_line(self):
        pi = parse_permutation("(3,6)(2,5)(1,4,7,8)")
        assert pi.one_line == (4, 5, 6, 7, 2, 3, 8, 1)
        assert str(pi) == "45672381"

    @pytest.mark.unit
    def test_descents_and_ascents(self):
        sets = parse_permutation("45672381").boundary_sets()
        assert sets.descents == frozenset({4, 7})
        assert sets.ascents == frozenset({1, 2, 3, 5, 6})
        assert sets.descent_mask == 0b1001000

    @pytest.mark.unit
    def test_cycle_form_policies(self):
        pi = parse_permutation("45672381")
        assert format_permutation(pi) == "(3,6)(2,5)(1,4,7,8)"
        largest = pi.cycle_form(CyclePolicy.LARGEST_FIRST_ASCENDING)
        assert largest.render() == "(5,2)(6,3)(8,1,4,7)"

    @pytest.mark.unit
    def test_parse_formats(self):
        expected = Permutation((2, 3, 1))
        assert parse_permutation("231") == expected
        assert parse_permutation("2 3 1") == expected
        assert parse_permutation("2,3,1") == expected
        assert parse_permutation("(1,2,3)") == expected

    @pytest.mark.unit
    def test_long_one_line(self):
        pi = parse_permutation("(15,17)(14)(6,8,16,13,7,12)(5,11)(4,10)(1,2,3,9)")
        assert pi.one_line_text() == "2 3 9 10 11 8 12 16 1 4 5 6 7 14 17 13 15"

    @pytest.mark.unit
    @pytest.mark.parametrize("text", ["", "1 1 2", "(1,2)(2,3)", "0 1", "1 x"])
    def test_malformed_permutations(self, text):
        with pytest.raises(PermutationError):
            parse_permutation(text)

    @pytest.mark.unit
    def test_inverse_and_compose(self):
        for pi in all_permutations(4):
            assert pi.compose(pi.inverse()) == Permutation.identity(4)


class TestParityClass:
    """S^o_n (only odd cycles) and S^e_n (even cycles plus at most one fixed point)."""

    @pytest.mark.unit
    def test_examples(self):
        assert classify_parity(parse_permutation("(5)(3)(2,6,4)(1,8,7)")) is ParityClass.ODD_CYCLES
        assert classify_parity(parse_permutation("(3,6)(2,5)(1,4,7,8)")) is ParityClass.EVEN_CYCLES
        assert classify_parity(parse_permutation("(1,2)(3)(4)")) is ParityClass.NEITHER
        assert classify_parity(Permutation.identity(1)) is ParityClass.BOTH

    @pytest.mark.unit
    def test_class_sizes(self, closed_form_totals):
        for n in range(1, 7):
            classes = [classify_parity(pi) for pi in all_permutations(n)]
            assert sum(c.is_odd for c in classes) == closed_form_totals[n]
            assert sum(c.is_even for c in classes) == closed_form_totals[n]


class TestBonaMap:
    """Bóna's bijection for even n."""

    @pytest.mark.unit
    def test_identity(self):
        assert str(bona_map(Permutation.identity(4))) == "2143"
        assert str(bona_map(Permutation.identity(2))) == "21"

    @pytest.mark.unit
    def test_three_cycle_with_fixed_point(self):
        image = bona_map(parse_permutation("(3,1,2)(4)"))
        assert image == parse_permutation("(3,1)(4,2)")

    @pytest.mark.unit
    @pytest.mark.parametrize("n", [2, 4, 6])
    def test_bijection_onto_even_class(self, n):
        domain = [pi for pi in all_permutations(n) if classify_parity(pi).is_odd]
        images = {bona_map(pi) for pi in domain}
        target = {pi for pi in all_permutations(n) if classify_parity(pi).is_even}
        assert len(images) == len(domain)
        assert images == target

    @pytest.mark.unit
    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            bona_map(Permutation.identity(3))
        with pytest.raises(PreconditionError):
            bona_map(parse_permutation("2143"))


class TestHatTransform:
    """Cycle form with the parentheses removed, and its inverse."""

    @pytest.mark.unit
    def test_example(self):
        pi = parse_permutation("(6)(1,7,3,8,4,2,5)")
        assert foata_hat(pi) == (6, 1, 7, 3, 8, 4, 2, 5)

    @pytest.mark.unit
    def test_left_to_right_minima_mark_cycle_starts(self):
        assert left_to_right_minima((6, 1, 7, 3, 8, 4, 2, 5)) == [0, 1]

    @pytest.mark.unit
    def test_roundtrip(self):
        for n in range(1, 7):
            for pi in all_permutations(n):
                assert foata_hat_inverse(foata_hat(pi)) == pi

    @pytest.mark.unit
    def test_inverse_rejects_non_permutation(self):
        with pytest.raises(PermutationError):
            foata_hat_inverse((1, 1, 2))


class TestStandardization:
    """Standard and costandard permutations of words."""

    @pytest.mark.unit
    def test_small_words(self):
        assert standard_permutation(w("bab")).one_line == (2, 1, 3)
        assert costandard_permutation(w("bab")).one_line == (3, 1, 2)

    @pytest.mark.unit
    def test_recover_inverse_from_block_word(self):
        for n in range(1, 6):
            subsets = list(all_subsets(n))
            for pi in all_permutations(n):
                for subset in subsets:
                    word = word_of_inverse(subset, pi)
                    if subset.contains(pi.descents):
                        assert standard_permutation(word) == pi.inverse()
                    if subset.contains(pi.ascents):
                        assert costandard_permutation(word) == pi.inverse()

    @pytest.mark.unit
    def test_block_word_example(self):
        # pi^-1 = 85612347 read through the blocks {1..4}, {5..7}, {8}
        pi = parse_permutation("45672381")
        assert word_of_inverse(SubsetS.parse("4,7", 8), pi) == w("cbbaaaab")
