"""Scaled-suffix profile and the factorization into irreducible scaled factors.

A factor u of w is *scaled* when its letter counts are an integer multiple of
the unit vector P_w / g (g = gcd of the counts, norm s = n/g). Every word
factors uniquely into irreducible scaled factors by repeatedly closing the
shortest scaled prefix; the profile records the factor boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .backend import get_kernels
from .core import ParikhVector, Word, gcd_of_vector


@dataclass(frozen=True)
class ScaledProfile:
    """Boolean start-position array plus the factor-size threshold.

    ``L[i]`` is 1 exactly when the suffix starting at i is scaled
    (equivalently: the prefix of length i is scaled). ``T`` is the largest
    number of s-length blocks consumed by one irreducible factor, so every
    full Abelian period is at least ``s * T``. ``ops`` counts positions
    consumed plus per-letter block tests (linearity instrumentation).
    """

    L: np.ndarray
    T: int
    s: int
    ops: int


def compute_l(w: Word, s: int, g: int, pw: ParikhVector, *, backend: str | None = None) -> ScaledProfile:
    """Scan ``w`` once, marking every scaled-suffix start position.

    The per-block test is integer-only: after t blocks of length s the factor
    is scaled iff ``counts[j] // t == pw[j] // g`` for every occurring letter
    (floor equality per letter is exact here because the block lengths force
    the count sums to match). Letters absent from ``w`` satisfy the test
    trivially and are skipped. Raises if the final factor does not close
    exactly at the word end, which only happens on inconsistent inputs.
    """
    n = len(w)
    if n == 0:
        raise ValueError("empty word")
    if g <= 1:
        raise ValueError(f"requires g > 1, got g={g}")
    if g * s != n:
        raise ValueError(f"inconsistent parameters: g*s = {g * s} != n = {n}")
    if pw.norm != n:
        raise ValueError("letter counts do not sum to the word length")
    if gcd_of_vector(pw) != g:
        raise ValueError("g is not the gcd of the letter counts")
    unit = np.asarray([c // g for c in pw.counts], dtype=np.longlong)
    L = np.zeros(n, dtype=np.uint8)
    T, ops = get_kernels(backend).compute_l_kernel(w.codes, s, unit, L)
    return ScaledProfile(L=L, T=int(T), s=s, ops=int(ops))


def irreducible_factorization(profile: ScaledProfile, n: int | None = None) -> list[int]:
    """Lengths of the unique factorization into irreducible scaled factors.

    Consecutive differences of the marked start positions, closed with n.
    """
    length = len(profile.L)
    if n is None:
        n = length
    elif n != length:
        raise ValueError(f"profile covers {length} positions, not {n}")
    starts = np.flatnonzero(profile.L)
    bounds = np.append(starts, n)
    return np.diff(bounds).astype(int).tolist()
