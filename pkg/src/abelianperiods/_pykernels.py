"""Pure-Python twins of the compiled scan kernels.

Same signatures, same return values (instrumentation counters included) as
``_kernels``; selected automatically when the extension is not built. The
loops mirror the compiled ones literally, so they are slow on long words but
correct everywhere.
"""

from __future__ import annotations

import bisect
from math import gcd


def count_codes(codes: bytes, sigma: int) -> list[int]:
    """Letter counts of ``codes`` over ranks 0..sigma-1."""
    return [codes.count(j) for j in range(sigma)]


def compute_l_kernel(codes, s, unit, L):
    """Greedy scan closing the shortest scaled factor at each boundary.

    Marks factor start positions in ``L`` (uint8, preallocated zeros) and
    returns ``(T, ops)``: the largest factor size in s-blocks and the count
    of positions consumed plus per-letter block tests.
    """
    n = len(codes)
    sigma = len(unit)
    unit = [int(u) for u in unit]
    occ = [j for j in range(sigma) if unit[j] > 0]
    counts = [0] * sigma
    i = 0
    big_t = 0
    ops = 0
    while i <= n - s:
        t = 0
        for j in occ:
            counts[j] = 0
        ok = False
        while not ok:
            if i + s > n:
                raise ValueError("scaled factor still open at the word end")
            t += 1
            for _ in range(s):
                counts[codes[i]] += 1
                i += 1
            ops += s
            ok = True
            for j in occ:
                ops += 1
                if counts[j] // t != unit[j]:
                    ok = False
                    break
        L[i - t * s] = 1
        if t > big_t:
            big_t = t
    if i != n:
        raise ValueError("scaled factorization did not close at the word end")
    return big_t, ops


def scan_multiples(L, step, n):
    """Probe L at step, 2*step, ... below n; stop at the first zero.

    Returns ``(all_ones, probes)``.
    """
    k = 1
    probes = 0
    while k * step < n:
        probes += 1
        if L[k * step] == 0:
            return False, probes
        k += 1
    return True, probes


def candidate_kernel(codes, totals, divisors, A, bad):
    """Flag prefixes whose letter counts are exactly proportional to the totals.

    ``A[i]`` (i = prefix length, 1-based) is set when
    ``counts_i[j] * n == totals[j] * i`` for every letter; for each failing
    prefix the divisor gcd(i, n) is flagged in ``bad`` (indexed like
    ``divisors``, the ascending divisors of n).
    """
    n = len(codes)
    sigma = len(totals)
    totals = [int(t) for t in totals]
    occ = [j for j in range(sigma) if totals[j] > 0]
    counts = [0] * sigma
    div_list = [int(d) for d in divisors]
    for pos in range(n):
        counts[codes[pos]] += 1
        i = pos + 1
        for j in occ:
            if counts[j] * n != totals[j] * i:
                bad[bisect.bisect_left(div_list, gcd(i, n))] = 1
                break
        else:
            A[i] = 1
