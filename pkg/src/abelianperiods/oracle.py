"""Brute-force reference for full Abelian periods.

Deliberately independent of the optimized implementations: blocks are
counted with numpy bincount and divisors come from a linear scan, so a bug
in the scan kernels cannot propagate here. Used to validate the fast
algorithms and to generate expected values for fixtures.
"""

from __future__ import annotations

import numpy as np

from .core import PeriodSet, Word


def _block_counts_equal(codes: np.ndarray, sigma: int, p: int) -> bool:
    # One bincount over (block index, letter) pairs, then compare every row
    # to the first block's row.
    m = len(codes) // p
    block_of = np.repeat(np.arange(m, dtype=np.int64), p)
    counts = np.bincount(block_of * sigma + codes, minlength=m * sigma).reshape(m, sigma)
    return bool((counts == counts[0]).all())


def is_full_abelian_period(w: Word, p: int) -> bool:
    """True iff p divides n and the n/p consecutive p-blocks are anagrams."""
    n = len(w)
    if n == 0:
        raise ValueError("empty word")
    if not 1 <= p <= n:
        raise ValueError(f"period must be in 1..{n}, got {p}")
    if n % p:
        return False
    codes = np.frombuffer(w.codes, dtype=np.uint8).astype(np.int64)
    return _block_counts_equal(codes, w.alphabet.size, p)


def full_abelian_periods_bruteforce(w: Word) -> PeriodSet:
    """Every divisor p of n passing the blockwise anagram check."""
    n = len(w)
    if n == 0:
        raise ValueError("empty word")
    candidates = np.arange(1, n + 1, dtype=np.int64)
    divisors = candidates[n % candidates == 0]  # linear scan on purpose
    codes = np.frombuffer(w.codes, dtype=np.uint8).astype(np.int64)
    sigma = w.alphabet.size
    found = tuple(int(p) for p in divisors if _block_counts_equal(codes, sigma, int(p)))
    return PeriodSet(found)
