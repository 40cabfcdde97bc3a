import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from abelianperiods import (
    Alphabet,
    ParikhVector,
    Word,
    divisors_at_least,
    gcd_of_vector,
    parikh_equal,
    parikh_vector,
)
from conftest import EXAMPLE_TEXT, word


class TestAlphabet:
    def test_inferred_sorted_distinct(self):
        assert Alphabet.from_bytes(b"banana").symbols == b"abn"

    def test_letters_default(self):
        assert Alphabet.letters(3).symbols == b"abc"
        assert Alphabet.letters(30).symbols == bytes(range(30))

    def test_rejects_unsorted(self):
        with pytest.raises(ValueError):
            Alphabet(b"ba")

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            Alphabet(b"")

    def test_encode_rejects_foreign_bytes(self):
        with pytest.raises(ValueError, match="outside the alphabet"):
            Alphabet(b"ab").encode(b"abc")

    def test_roundtrip(self):
        alpha = Alphabet(b"ACGT")
        data = b"GATTACA"
        assert alpha.decode(alpha.encode(data)) == data


class TestWord:
    def test_codes_are_ranks(self):
        assert word(b"aaba").codes == bytes([0, 0, 1, 0])

    def test_rejects_code_outside_alphabet(self):
        with pytest.raises(ValueError):
            Word(bytes([0, 2]), Alphabet(b"ab"))

    def test_empty_word_with_explicit_alphabet(self):
        w = Word(b"", Alphabet(b"ab"))
        assert len(w) == 0

    def test_raw_restores_input(self):
        assert word(EXAMPLE_TEXT).raw() == EXAMPLE_TEXT


class TestParikhVector:
    def test_aaba_over_abc(self):
        w = word(b"aaba", Alphabet(b"abc"))
        assert parikh_vector(w).counts == (3, 1, 0)

    def test_empty_word(self):
        pv = parikh_vector(Word(b"", Alphabet(b"abc")))
        assert pv.counts == (0, 0, 0)
        assert pv.norm == 0

    def test_example_word(self, example_word):
        assert parikh_vector(example_word).counts == (15, 15)

    def test_alphabet_mismatch(self, example_word):
        with pytest.raises(ValueError):
            parikh_vector(example_word, Alphabet(b"abc"))

    @given(st.lists(st.integers(0, 3), max_size=60))
    def test_norm_equals_length(self, codes):
        w = Word(bytes(codes), Alphabet.letters(4))
        assert parikh_vector(w).norm == len(w)

    @given(st.lists(st.integers(0, 3), min_size=1, max_size=60), st.data())
    def test_additivity_over_splits(self, codes, data):
        alpha = Alphabet.letters(4)
        k = data.draw(st.integers(0, len(codes)))
        whole = parikh_vector(Word(bytes(codes), alpha))
        left = parikh_vector(Word(bytes(codes[:k]), alpha))
        right = parikh_vector(Word(bytes(codes[k:]), alpha))
        assert whole.counts == tuple(a + b for a, b in zip(left.counts, right.counts))


class TestParikhEqual:
    def test_anagrams(self):
        alpha = Alphabet(b"ab")
        assert parikh_equal(parikh_vector(word(b"ab", alpha)), parikh_vector(word(b"ba", alpha)))

    def test_not_anagrams(self):
        alpha = Alphabet(b"ab")
        assert not parikh_equal(parikh_vector(word(b"ab", alpha)), parikh_vector(word(b"aa", alpha)))

    def test_square_halves(self):
        alpha = Alphabet.from_bytes(b"iceddice")
        assert parikh_equal(parikh_vector(word(b"iced", alpha)), parikh_vector(word(b"dice", alpha)))

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            parikh_equal(ParikhVector((1, 2)), ParikhVector((1, 2, 0)))


class TestGcdOfVector:
    @pytest.mark.parametrize(
        "counts,expected",
        [((15, 15), 15), ((5, 3), 1), ((4, 4, 4), 4), ((6, 0, 9), 3)],
    )
    def test_values(self, counts, expected):
        assert gcd_of_vector(ParikhVector(counts)) == expected

    def test_all_zero_rejected(self):
        with pytest.raises(ValueError):
            gcd_of_vector(ParikhVector((0, 0)))

    @given(st.lists(st.integers(0, 1000), min_size=1, max_size=8).filter(lambda c: any(c)))
    def test_permutation_invariant(self, counts):
        rng = random.Random(0)
        shuffled = counts[:]
        rng.shuffle(shuffled)
        assert gcd_of_vector(counts) == gcd_of_vector(shuffled)


class TestDivisors:
    @pytest.mark.parametrize(
        "m,lower,expected",
        [
            (15, 1, (1, 3, 5, 15)),
            (1, 1, (1,)),
            (12, 3, (3, 4, 6, 12)),
            (36, 1, (1, 2, 3, 4, 6, 9, 12, 18, 36)),
        ],
    )
    def test_values(self, m, lower, expected):
        assert divisors_at_least(m, lower).values == expected

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            divisors_at_least(0, 1)

    def test_against_linear_scan_up_to_1e4(self):
        for m in range(1, 10_001):
            expected = tuple(d for d in range(1, m + 1) if m % d == 0)
            assert divisors_at_least(m, 1).values == expected
