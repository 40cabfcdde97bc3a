"""Seeded random words with a planted full Abelian period.

Construction: draw one uniform base block of the planted length, then emit
n/p independent uniform permutations of it, so every generated word has the
planted value as a full Abelian period by construction (a reconstruction of
the usual benchmark inputs; the exact historical procedure is unspecified).

PRNG: numpy's PCG64 via ``default_rng``; the identifier recorded in benchmark
CSV metadata is ``pcg64``. Streams are stable for a fixed numpy version. Per
cell/trial seeds come from ``derive_seed``, which feeds an entropy tuple to
``numpy.random.SeedSequence`` so parallel cells get independent streams.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Alphabet, Word

GENERATOR_ID = "pcg64"


@dataclass(frozen=True)
class GenSpec:
    """Parameters of one generated word."""

    n: int
    sigma: int
    planted_period: int
    seed: int

    def __post_init__(self) -> None:
        if not 2 <= self.sigma <= 256:
            raise ValueError(f"sigma must be in 2..256, got {self.sigma}")
        if not 1 <= self.planted_period <= self.n:
            raise ValueError(f"planted period must be in 1..{self.n}")
        if self.n % self.planted_period:
            raise ValueError(
                f"planted period {self.planted_period} does not divide the length {self.n}"
            )


def derive_seed(base_seed: int, *key: int) -> int:
    """64-bit child seed for (base_seed, *key), via SeedSequence."""
    ss = np.random.SeedSequence((base_seed, *key))
    return int(ss.generate_state(1, np.uint64)[0])


def generate(spec: GenSpec, base_block: bytes | None = None) -> Word:
    """Word of length n over sigma letters with the planted full Abelian period.

    ``base_block`` (debug) fixes the block instead of drawing it; it must hold
    alphabet ranks and have the planted length. Blocks shorter than sigma
    necessarily omit letters; downstream code recomputes the effective
    alphabet, so that is fine.
    """
    rng = np.random.default_rng(spec.seed)
    p = spec.planted_period
    m = spec.n // p
    if base_block is None:
        base = rng.integers(0, spec.sigma, size=p, dtype=np.uint8)
    else:
        if len(base_block) != p:
            raise ValueError(f"base block must have length {p}, got {len(base_block)}")
        base = np.frombuffer(base_block, dtype=np.uint8)
        if base.size and int(base.max()) >= spec.sigma:
            raise ValueError("base block contains codes outside the alphabet")
    blocks = rng.permuted(np.tile(base, (m, 1)), axis=1)
    return Word(blocks.reshape(-1).tobytes(), Alphabet.letters(spec.sigma))


def repeated_alphabet_word(sigma: int, n: int) -> Word:
    """The word cycling a1..a_sigma n/sigma times; periods are exactly the
    multiples of sigma dividing n."""
    if not 1 <= sigma <= 256:
        raise ValueError(f"sigma must be in 1..256, got {sigma}")
    if n < 1:
        raise ValueError("length must be positive")
    if n % sigma:
        raise ValueError(f"alphabet size {sigma} must divide the length {n}")
    codes = bytes(range(sigma)) * (n // sigma)
    return Word(codes, Alphabet.letters(sigma))
