"""Full Abelian periods via proportional prefixes (linear-algorithm baseline).

A prefix length i is proportional to n when the prefix letter counts are a
scalar multiple of the whole-word counts; p is a full Abelian period exactly
when p divides n and every multiple of p is proportional. Proportionality is
tested by exact integer cross-multiplication (``counts_i[j] * n ==
totals[j] * i``), never by comparing real-valued normalized vectors; the
products pair two values <= n, hence the n <= 2**30 cap. The divisor filter
uses a per-position Euclidean gcd over the non-proportional positions
(O(|X| log n)) instead of a constant-time-gcd preprocessing scheme; outputs
are unchanged, and the substitution is documented in the README so benchmark
ratios are read fairly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .backend import get_kernels
from .core import MAX_LENGTH, PeriodSet, Word, divisors_at_least


@dataclass(frozen=True)
class PrefixTable:
    """Materialized cumulative letter counts for every prefix length.

    ``cumulative[j, i]`` is the count of letter j in the first i symbols.
    ``ell`` is the rank of a least frequent occurring letter and ``q0`` the
    1-based prefix length of its first occurrence; the integer test does not
    need them, but the float diagnostic mode normalizes by letter ``ell``.
    Uses O(sigma * n) memory; ``candidate_set`` streams with O(sigma) state
    instead, and both must produce identical candidate arrays.
    """

    cumulative: np.ndarray
    totals: tuple[int, ...]
    ell: int
    q0: int


@dataclass(frozen=True)
class CandidateSet:
    """A[i] = 1 iff prefix length i (1-based) is proportional to n; A[0] = 0."""

    A: np.ndarray

    @property
    def n(self) -> int:
        return len(self.A) - 1

    def positions(self) -> list[int]:
        return np.flatnonzero(self.A).astype(int).tolist()


def _check_length(n: int) -> None:
    if n == 0:
        raise ValueError("empty word")
    if n > MAX_LENGTH:
        raise ValueError(f"word length {n} exceeds the cross-multiplication bound {MAX_LENGTH}")


def build_prefix_table(w: Word) -> PrefixTable:
    n = len(w)
    _check_length(n)
    sigma = w.alphabet.size
    codes = np.frombuffer(w.codes, dtype=np.uint8)
    cumulative = np.zeros((sigma, n + 1), dtype=np.int64)
    for j in range(sigma):
        np.cumsum(codes == j, dtype=np.int64, out=cumulative[j, 1:])
    totals = tuple(int(c) for c in cumulative[:, n])
    occurring = np.flatnonzero(cumulative[:, n] > 0)
    ell = int(occurring[np.argmin(cumulative[occurring, n])])
    q0 = int(np.flatnonzero(codes == ell)[0]) + 1
    return PrefixTable(cumulative=cumulative, totals=totals, ell=ell, q0=q0)


def is_proportional_to_n(table: PrefixTable, i: int) -> bool:
    """Exact proportionality of prefix i to the whole word, by cross-multiplication."""
    n = table.cumulative.shape[1] - 1
    if not 1 <= i <= n:
        raise ValueError(f"prefix length must be in 1..{n}, got {i}")
    return all(
        int(table.cumulative[j, i]) * n == table.totals[j] * i
        for j in range(len(table.totals))
    )


def _candidates_streaming(w: Word, backend: str | None) -> tuple[np.ndarray, np.ndarray, tuple[int, ...]]:
    n = len(w)
    kernels = get_kernels(backend)
    totals = np.asarray(kernels.count_codes(w.codes, w.alphabet.size), dtype=np.longlong)
    divisors = divisors_at_least(n, 1).values
    A = np.zeros(n + 1, dtype=np.uint8)
    bad = np.zeros(len(divisors), dtype=np.uint8)
    kernels.candidate_kernel(w.codes, totals, np.asarray(divisors, dtype=np.longlong), A, bad)
    return A, bad, divisors


def _candidates_materialized(table: PrefixTable) -> np.ndarray:
    n = table.cumulative.shape[1] - 1
    totals = np.asarray(table.totals, dtype=np.int64)[:, None]
    lengths = np.arange(n + 1, dtype=np.int64)
    A = (table.cumulative * np.int64(n) == totals * lengths).all(axis=0).astype(np.uint8)
    A[0] = 0
    return A


def _candidates_float(table: PrefixTable, tol: float) -> np.ndarray:
    """Diagnostic: normalized-vector comparison in floating point.

    Divides every prefix count by the count of the least frequent letter and
    compares against the whole-word vector within ``tol``. Exists to show how
    tolerance choices change the answer; the exact integer test is the one
    used for results.
    """
    n = table.cumulative.shape[1] - 1
    counts = table.cumulative.astype(np.float64)
    with np.errstate(divide="ignore", invalid="ignore"):
        gamma = counts / counts[table.ell]
    gamma_n = gamma[:, n][:, None]
    close = np.abs(gamma - gamma_n) <= tol
    A = close.all(axis=0)
    A &= np.arange(n + 1) >= table.q0
    A[n] = True
    return A.astype(np.uint8)


def candidate_set(
    w: Word,
    *,
    backend: str | None = None,
    materialized: bool = False,
    float_mode: bool = False,
    float_tol: float = 1e-9,
) -> CandidateSet:
    """Proportional prefix lengths of ``w`` as a boolean array over 0..n."""
    _check_length(len(w))
    if float_mode:
        return CandidateSet(_candidates_float(build_prefix_table(w), float_tol))
    if materialized:
        return CandidateSet(_candidates_materialized(build_prefix_table(w)))
    A, _, _ = _candidates_streaming(w, backend)
    return CandidateSet(A)


def periods_from_candidates(cs: CandidateSet) -> PeriodSet:
    """Divisors of n all of whose multiples up to n are candidates.

    Filter: collect gcd(x, n) for every non-candidate x, then keep the
    divisors of n dividing none of the collected values.
    """
    n = cs.n
    x = np.flatnonzero(cs.A[1:] == 0).astype(np.int64) + 1
    bad = np.unique(np.gcd(x, n)) if len(x) else np.asarray([], dtype=np.int64)
    divisors = divisors_at_least(n, 1).values
    kept = [d for d in divisors if all(int(q) % d for q in bad)]
    return PeriodSet(tuple(kept))


def full_abelian_periods_lfap(
    w: Word, *, backend: str | None = None, materialized: bool = False
) -> PeriodSet:
    """Sorted set of all full Abelian periods, candidate-filter route."""
    _check_length(len(w))
    if materialized:
        return periods_from_candidates(candidate_set(w, materialized=True))
    A, bad_flags, divisors = _candidates_streaming(w, backend)
    bad = [int(q) for q, flag in zip(divisors, bad_flags) if flag]
    kept = [d for d in divisors if all(q % d for q in bad)]
    return PeriodSet(tuple(kept))
