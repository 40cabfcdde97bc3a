import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abelianperiods import (
    Alphabet,
    Word,
    analyze,
    candidate_set,
    full_abelian_periods_bruteforce,
    full_abelian_periods_lfap,
    full_abelian_periods_qlfap,
    is_proportional_to_n,
)
from abelianperiods.lfap import build_prefix_table, periods_from_candidates
from conftest import word


class TestPrefixTable:
    def test_totals_and_monotonicity(self, example_word):
        table = build_prefix_table(example_word)
        assert table.totals == (15, 15)
        assert (table.cumulative[:, 1:] >= table.cumulative[:, :-1]).all()
        assert tuple(table.cumulative[:, -1]) == (15, 15)

    def test_least_frequent_letter(self):
        table = build_prefix_table(word(b"aabab"))
        assert table.ell == 1  # two b versus three a
        assert table.q0 == 3  # first b is the third symbol
        assert all(table.cumulative[table.ell, i] >= 1 for i in range(table.q0, 6))

    def test_tie_breaks_to_smallest_rank(self):
        assert build_prefix_table(word(b"abab")).ell == 0


class TestProportionality:
    def test_half_prefix(self):
        table = build_prefix_table(word(b"abab"))
        assert is_proportional_to_n(table, 2)

    def test_full_prefix_always(self, example_word):
        table = build_prefix_table(example_word)
        assert is_proportional_to_n(table, 30)

    def test_example_position_4(self, example_word):
        table = build_prefix_table(example_word)
        assert not is_proportional_to_n(table, 4)

    def test_bounds(self, example_word):
        table = build_prefix_table(example_word)
        with pytest.raises(ValueError):
            is_proportional_to_n(table, 0)
        with pytest.raises(ValueError):
            is_proportional_to_n(table, 31)


class TestCandidateSet:
    def test_example_word(self, example_word):
        # Proportional prefix lengths are the scaled ones: the marked starts
        # of the profile plus n itself.
        cs = candidate_set(example_word)
        assert cs.positions() == [2, 8, 10, 12, 14, 16, 20, 22, 24, 26, 30]

    def test_unary(self):
        assert candidate_set(word(b"aaaa")).positions() == [1, 2, 3, 4]

    def test_two_letters(self):
        assert candidate_set(word(b"ab")).A.tolist() == [0, 0, 1]

    def test_matches_prefix_table_pointwise(self, example_word):
        table = build_prefix_table(example_word)
        cs = candidate_set(example_word)
        for i in range(1, 31):
            assert bool(cs.A[i]) == is_proportional_to_n(table, i)

    def test_streaming_equals_materialized(self):
        for text in (b"abaababbbabaabbabbaaabbababbaa", b"aabbab", b"aaaa", b"abcabc"):
            w = word(text)
            streaming = candidate_set(w).A.tolist()
            materialized = candidate_set(w, materialized=True).A.tolist()
            assert streaming == materialized, text

    def test_duality_with_scaled_profile(self, example_word):
        a = analyze(example_word)
        cs = candidate_set(example_word)
        n = len(example_word)
        for i in range(1, n):
            assert bool(cs.A[i]) == bool(a.profile.L[i])
        assert cs.A[n] == 1


class TestFullPeriods:
    @pytest.mark.parametrize(
        "text,expected",
        [
            (b"abaababbbabaabbabbaaabbababbaa", (10, 30)),
            (b"abaababa", (8,)),
            (b"abcabcabcabc", (3, 6, 12)),
            (b"aaaa", (1, 2, 4)),
        ],
    )
    def test_values(self, text, expected):
        assert full_abelian_periods_lfap(word(text)).periods == expected
        assert full_abelian_periods_lfap(word(text), materialized=True).periods == expected

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            full_abelian_periods_lfap(Word(b"", Alphabet(b"ab")))

    def test_accepted_divisors_have_proportional_multiples(self, example_word):
        cs = candidate_set(example_word)
        for p in full_abelian_periods_lfap(example_word):
            assert all(cs.A[k] for k in range(p, len(example_word) + 1, p))

    @given(st.lists(st.integers(0, 2), min_size=1, max_size=40))
    @settings(max_examples=300, deadline=None)
    def test_agreement_with_qlfap_and_oracle(self, codes):
        w = Word(bytes(codes), Alphabet.letters(3))
        expected = full_abelian_periods_bruteforce(w).periods
        assert full_abelian_periods_lfap(w).periods == expected
        assert full_abelian_periods_qlfap(w).periods == expected

    def test_exhaustive_ternary_up_to_7(self):
        alpha = Alphabet.letters(3)
        for n in range(1, 8):
            for tpl in itertools.product(range(3), repeat=n):
                w = Word(bytes(tpl), alpha)
                assert (
                    full_abelian_periods_lfap(w).periods
                    == full_abelian_periods_qlfap(w).periods
                )


class TestFloatDiagnosticMode:
    def test_tight_tolerance_matches_exact(self):
        for text in (b"abaababbbabaabbabbaaabbababbaa", b"aabbab", b"abba"):
            w = word(text)
            exact = candidate_set(w).A.tolist()
            floated = candidate_set(w, float_mode=True).A.tolist()
            assert exact == floated, text

    def test_sloppy_tolerance_invents_a_period(self):
        # With a loose tolerance the normalized vectors of the length-3
        # prefix of "aabbab" look close enough to the whole word's, and the
        # bogus candidate lets 3 through the divisor filter.
        w = word(b"aabbab")
        assert full_abelian_periods_lfap(w).periods == (6,)
        sloppy = periods_from_candidates(candidate_set(w, float_mode=True, float_tol=0.6))
        assert 3 in sloppy
