"""All full Abelian periods via divisor scans over the scaled profile.

Every full Abelian period is a multiple d*s of the minimal candidate s = n/g,
with d a divisor of g, and d*s is a period exactly when every multiple of d*s
starts a scaled suffix. Profile construction is linear; the divisor scans sum
to O(n log log n) probes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .backend import get_kernels
from .core import (
    ParikhVector,
    PeriodSet,
    Word,
    divisors_at_least,
    gcd_of_vector,
    parikh_vector,
)
from .scaled import ScaledProfile, compute_l


@dataclass(frozen=True)
class PeriodAnalysis:
    """Everything the divisor-scan computation produced for one word."""

    n: int
    sigma: int
    effective_sigma: int
    parikh: ParikhVector
    g: int
    s: int
    profile: ScaledProfile | None
    periods: PeriodSet
    scan_probes: int


def analyze(w: Word, *, backend: str | None = None) -> PeriodAnalysis:
    """Compute the full Abelian periods of ``w`` plus the intermediates.

    Trivial cases short-circuit: a single occurring letter makes every
    divisor of n a period, and g = 1 leaves only n itself. Otherwise the
    scaled profile is built and each divisor d of g with T <= d < g is
    accepted iff the scan of L at multiples of d*s sees only ones; n is
    always included.
    """
    n = len(w)
    if n == 0:
        raise ValueError("empty word")
    pv = parikh_vector(w, backend=backend)
    effective_sigma = sum(1 for c in pv.counts if c)
    g = gcd_of_vector(pv)
    s = n // g
    base = dict(n=n, sigma=w.alphabet.size, effective_sigma=effective_sigma, parikh=pv, g=g, s=s)
    if effective_sigma == 1:
        periods = PeriodSet(divisors_at_least(n, 1).values)
        return PeriodAnalysis(**base, profile=None, periods=periods, scan_probes=0)
    if g == 1:
        return PeriodAnalysis(**base, profile=None, periods=PeriodSet((n,)), scan_probes=0)
    profile = compute_l(w, s, g, pv, backend=backend)
    kernels = get_kernels(backend)
    accepted: list[int] = []
    probes_total = 0
    for d in divisors_at_least(g, max(profile.T, 1)).values:
        if d >= g:
            break
        ok, probes = kernels.scan_multiples(profile.L, d * s, n)
        probes_total += int(probes)
        if ok:
            accepted.append(d * s)
    accepted.append(n)
    return PeriodAnalysis(**base, profile=profile, periods=PeriodSet(tuple(accepted)), scan_probes=probes_total)


def full_abelian_periods_qlfap(w: Word, *, backend: str | None = None) -> PeriodSet:
    """Sorted set of all p such that w splits into n/p blocks of equal counts."""
    return analyze(w, backend=backend).periods


def smallest_full_abelian_period(w: Word, *, backend: str | None = None) -> int:
    if len(w) == 0:
        raise ValueError("empty word")
    return analyze(w, backend=backend).periods.smallest
