"""Scaled-profile behavior, checked against a direct definition oracle."""

import itertools

import pytest

from abelianperiods import (
    Alphabet,
    Word,
    compute_l,
    gcd_of_vector,
    irreducible_factorization,
    parikh_vector,
)
from conftest import EXAMPLE_FACTORS, EXAMPLE_L, EXAMPLE_TEXT, word


def profile_of(w: Word):
    pv = parikh_vector(w)
    g = gcd_of_vector(pv)
    return compute_l(w, len(w) // g, g, pv)


def scaled_prefix_lengths(w: Word) -> set[int]:
    """Definition oracle: prefix lengths i whose counts equal (i/s) * (P_w/g).

    Direct Parikh computation, no shared logic with the scanning kernel.
    """
    pv = parikh_vector(w)
    g = gcd_of_vector(pv)
    s = len(w) // g
    unit = [c // g for c in pv.counts]
    out = set()
    for i in range(len(w) + 1):
        if i % s:
            continue
        k = i // s
        prefix = parikh_vector(Word(w.codes[:i], w.alphabet))
        if list(prefix.counts) == [k * u for u in unit]:
            out.add(i)
    return out


class TestComputeL:
    def test_example_word(self, example_word):
        profile = profile_of(example_word)
        assert profile.L.tolist() == EXAMPLE_L
        assert profile.T == 3
        assert profile.s == 2

    def test_alternating_blocks(self):
        profile = profile_of(word(b"abab"))
        assert profile.L.tolist() == [1, 0, 1, 0]
        assert profile.T == 1

    def test_two_block_factor(self):
        profile = profile_of(word(b"aabb"))
        assert profile.L.tolist() == [1, 0, 0, 0]
        assert profile.T == 2

    def test_preconditions(self, example_word):
        pv = parikh_vector(example_word)
        with pytest.raises(ValueError):
            compute_l(example_word, 30, 1, pv)  # g must exceed 1
        with pytest.raises(ValueError):
            compute_l(example_word, 3, 15, pv)  # g * s != n
        with pytest.raises(ValueError):
            compute_l(example_word, 6, 5, pv)  # g not the gcd

    def test_declared_absent_letter_is_ignored(self):
        w = word(b"abab", Alphabet(b"abc"))
        profile = profile_of(w)
        assert profile.L.tolist() == [1, 0, 1, 0]

    def test_matches_definition_exhaustively(self):
        # All binary words of length <= 14 with g > 1 (profile defined).
        alpha = Alphabet(b"ab")
        checked = 0
        for n in range(2, 15):
            for tpl in itertools.product(range(2), repeat=n):
                w = Word(bytes(tpl), alpha)
                pv = parikh_vector(w)
                g = gcd_of_vector(pv)
                if g <= 1:
                    continue
                profile = compute_l(w, n // g, g, pv)
                marked = set(profile.L.nonzero()[0].tolist()) | {n}
                assert marked == scaled_prefix_lengths(w), tpl
                # position/test counter stays linear
                assert profile.ops <= 3 * n
                # start positions sit on the s-grid and 0 is always marked
                assert profile.L[0] == 1
                assert all(i % profile.s == 0 for i in marked)
                # longest factor determines T
                factors = irreducible_factorization(profile)
                assert max(factors) == profile.T * profile.s
                checked += 1
        assert checked > 4000


class TestIrreducibleFactorization:
    def test_example_word(self, example_word):
        profile = profile_of(example_word)
        lengths = irreducible_factorization(profile, len(example_word))
        assert lengths == [len(f) for f in EXAMPLE_FACTORS]
        pieces = []
        pos = 0
        for length in lengths:
            pieces.append(EXAMPLE_TEXT[pos:pos + length])
            pos += length
        assert pieces == EXAMPLE_FACTORS

    def test_alternating(self):
        assert irreducible_factorization(profile_of(word(b"abab"))) == [2, 2]

    def test_single_factor(self):
        assert irreducible_factorization(profile_of(word(b"aabb"))) == [4]

    def test_length_mismatch_rejected(self, example_word):
        with pytest.raises(ValueError):
            irreducible_factorization(profile_of(example_word), 29)

    def test_occurring_letters_bound(self):
        # g > 1 forces every occurring letter count to be at least g, so the
        # minimal candidate period covers the occurring letters.
        for text in (b"aabbcc", b"abcabc", b"aaabbb"):
            w = word(text)
            pv = parikh_vector(w)
            g = gcd_of_vector(pv)
            occurring = sum(1 for c in pv.counts if c)
            assert all(c >= g for c in pv.counts if c)
            assert len(w) // g >= occurring
