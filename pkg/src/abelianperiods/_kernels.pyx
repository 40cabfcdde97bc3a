# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled scan kernels for the period algorithms.

The pure-Python twins in ``_pykernels`` implement the same signatures and
must return identical values, instrumentation counters included.
"""

from libc.string cimport memset


def count_codes(const unsigned char[::1] codes, int sigma):
    """Letter counts of ``codes`` over ranks 0..sigma-1."""
    cdef long long counts[256]
    cdef Py_ssize_t i, n = codes.shape[0]
    memset(counts, 0, sizeof(counts))
    for i in range(n):
        counts[codes[i]] += 1
    return [counts[j] for j in range(sigma)]


def compute_l_kernel(const unsigned char[::1] codes, long long s,
                     const long long[::1] unit, unsigned char[::1] L):
    """Greedy scan closing the shortest scaled factor at each boundary.

    Marks factor start positions in ``L`` (preallocated zeros) and returns
    ``(T, ops)``: the largest factor size in s-blocks and the count of
    positions consumed plus per-letter block tests.
    """
    cdef Py_ssize_t n = codes.shape[0]
    cdef int sigma = <int> unit.shape[0]
    cdef long long counts[256]
    cdef int occ[256]
    cdef int n_occ = 0, j, jj
    cdef long long i = 0, t, big_t = 0, ops = 0, k
    cdef bint ok

    memset(counts, 0, sizeof(counts))
    for j in range(sigma):
        if unit[j] > 0:
            occ[n_occ] = j
            n_occ += 1

    while i <= n - s:
        t = 0
        for jj in range(n_occ):
            counts[occ[jj]] = 0
        ok = False
        while not ok:
            if i + s > n:
                raise ValueError("scaled factor still open at the word end")
            t += 1
            for k in range(s):
                counts[codes[i]] += 1
                i += 1
            ops += s
            ok = True
            for jj in range(n_occ):
                ops += 1
                j = occ[jj]
                if counts[j] // t != unit[j]:
                    ok = False
                    break
        L[i - t * s] = 1
        if t > big_t:
            big_t = t
    if i != n:
        raise ValueError("scaled factorization did not close at the word end")
    return big_t, ops


def scan_multiples(const unsigned char[::1] L, long long step, long long n):
    """Probe L at step, 2*step, ... below n; stop at the first zero.

    Returns ``(all_ones, probes)``.
    """
    cdef long long k = 1, probes = 0
    while k * step < n:
        probes += 1
        if L[k * step] == 0:
            return False, probes
        k += 1
    return True, probes


cdef inline long long _gcd(long long a, long long b) noexcept:
    cdef long long r
    while b != 0:
        r = a % b
        a = b
        b = r
    return a


def candidate_kernel(const unsigned char[::1] codes, const long long[::1] totals,
                     const long long[::1] divisors, unsigned char[::1] A,
                     unsigned char[::1] bad):
    """Flag prefixes whose letter counts are exactly proportional to the totals.

    ``A[i]`` (i = prefix length, 1-based) is set when
    ``counts_i[j] * n == totals[j] * i`` for every letter; for each failing
    prefix the divisor gcd(i, n) is flagged in ``bad`` (indexed like
    ``divisors``, the ascending divisors of n).
    """
    cdef Py_ssize_t n = codes.shape[0]
    cdef int sigma = <int> totals.shape[0]
    cdef Py_ssize_t ndiv = divisors.shape[0]
    cdef long long counts[256]
    cdef int occ[256]
    cdef int n_occ = 0, j, jj
    cdef Py_ssize_t pos, lo, hi, mid
    cdef long long i, q
    cdef bint ok

    memset(counts, 0, sizeof(counts))
    for j in range(sigma):
        if totals[j] > 0:
            occ[n_occ] = j
            n_occ += 1

    for pos in range(n):
        counts[codes[pos]] += 1
        i = pos + 1
        ok = True
        for jj in range(n_occ):
            j = occ[jj]
            if counts[j] * n != totals[j] * i:
                ok = False
                break
        if ok:
            A[i] = 1
        else:
            q = _gcd(i, n)
            lo = 0
            hi = ndiv - 1
            while lo < hi:
                mid = (lo + hi) >> 1
                if divisors[mid] < q:
                    lo = mid + 1
                else:
                    hi = mid
            bad[lo] = 1
