"""Words over ordered byte alphabets, letter-count vectors, and the
divisor/gcd helpers both period algorithms depend on."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

# Prefix proportionality tests multiply two values <= n; capping n keeps the
# products inside 64-bit signed integers with a wide margin.
MAX_LENGTH = 1 << 30


@dataclass(frozen=True)
class Alphabet:
    """Ordered alphabet: distinct raw byte values stored ascending."""

    symbols: bytes

    def __post_init__(self) -> None:
        if not 1 <= len(self.symbols) <= 256:
            raise ValueError(f"alphabet size must be in 1..256, got {len(self.symbols)}")
        if any(a >= b for a, b in zip(self.symbols, self.symbols[1:])):
            raise ValueError("alphabet symbols must be distinct and ascending")

    @property
    def size(self) -> int:
        return len(self.symbols)

    @classmethod
    def from_bytes(cls, data: bytes) -> Alphabet:
        """Infer the alphabet as the sorted distinct bytes of ``data``."""
        if not data:
            raise ValueError("cannot infer an alphabet from empty input")
        return cls(bytes(sorted(set(data))))

    @classmethod
    def letters(cls, sigma: int) -> Alphabet:
        """Default alphabet: ``a``, ``b``, ... for sigma <= 26, raw bytes 0.. otherwise."""
        if not 1 <= sigma <= 256:
            raise ValueError(f"alphabet size must be in 1..256, got {sigma}")
        if sigma <= 26:
            return cls(bytes(range(ord("a"), ord("a") + sigma)))
        return cls(bytes(range(sigma)))

    @cached_property
    def _encode_table(self) -> bytes:
        table = bytearray(256)
        for rank, sym in enumerate(self.symbols):
            table[sym] = rank
        return bytes(table)

    @cached_property
    def _decode_table(self) -> bytes:
        table = bytearray(256)
        for rank, sym in enumerate(self.symbols):
            table[rank] = sym
        return bytes(table)

    @cached_property
    def _foreign_bytes(self) -> bytes:
        return bytes(sorted(set(range(256)) - set(self.symbols)))

    def encode(self, data: bytes) -> bytes:
        """Map raw bytes to alphabet ranks; reject bytes outside the alphabet."""
        if len(data.translate(None, self._foreign_bytes)) != len(data):
            bad = sorted(set(data) - set(self.symbols))
            raise ValueError(f"input contains bytes outside the alphabet: {bad[:8]}")
        return data.translate(self._encode_table)

    def decode(self, codes: bytes) -> bytes:
        return codes.translate(self._decode_table)


@dataclass(frozen=True)
class Word:
    """Immutable word stored as alphabet ranks, one byte per position."""

    codes: bytes
    alphabet: Alphabet

    def __post_init__(self) -> None:
        if len(self.codes) > MAX_LENGTH:
            raise ValueError(f"word length {len(self.codes)} exceeds the supported maximum {MAX_LENGTH}")
        if self.codes and max(self.codes) >= self.alphabet.size:
            raise ValueError("word contains codes outside the alphabet")

    @classmethod
    def from_bytes(cls, data: bytes, alphabet: Alphabet | None = None) -> Word:
        """Build a word from raw bytes, inferring the alphabet unless given."""
        if alphabet is None:
            alphabet = Alphabet.from_bytes(data)
        return cls(alphabet.encode(data), alphabet)

    @classmethod
    def from_codes(cls, codes: bytes, alphabet: Alphabet) -> Word:
        return cls(bytes(codes), alphabet)

    @property
    def length(self) -> int:
        return len(self.codes)

    def __len__(self) -> int:
        return len(self.codes)

    def raw(self) -> bytes:
        """The word as raw bytes of its alphabet."""
        return self.alphabet.decode(self.codes)


@dataclass(frozen=True)
class ParikhVector:
    """Per-letter occurrence counts; equal vectors mean anagram words."""

    counts: tuple[int, ...]

    @property
    def norm(self) -> int:
        return sum(self.counts)

    @property
    def sigma(self) -> int:
        return len(self.counts)

    def __getitem__(self, j: int) -> int:
        return self.counts[j]


@dataclass(frozen=True)
class DivisorList:
    """Strictly increasing divisors of some integer, lower-bounded."""

    values: tuple[int, ...]

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class PeriodSet:
    """Sorted set of full Abelian periods; each divides the word length."""

    periods: tuple[int, ...]

    def __post_init__(self) -> None:
        normalized = tuple(sorted(set(self.periods)))
        if not normalized or normalized[0] < 1:
            raise ValueError("periods must be positive integers")
        object.__setattr__(self, "periods", normalized)

    @property
    def smallest(self) -> int:
        return self.periods[0]

    def __iter__(self) -> Iterator[int]:
        return iter(self.periods)

    def __contains__(self, p: int) -> bool:
        return p in self.periods

    def __len__(self) -> int:
        return len(self.periods)


def parikh_vector(w: Word, alphabet: Alphabet | None = None, *, backend: str | None = None) -> ParikhVector:
    """Count the occurrences of each alphabet letter in ``w``."""
    if alphabet is not None and alphabet != w.alphabet:
        raise ValueError("word was built over a different alphabet")
    from .backend import get_kernels

    counts = get_kernels(backend).count_codes(w.codes, w.alphabet.size)
    return ParikhVector(tuple(counts))


def parikh_equal(p: ParikhVector, q: ParikhVector) -> bool:
    """Componentwise equality; requires the same alphabet size."""
    if p.sigma != q.sigma:
        raise ValueError(f"dimension mismatch: {p.sigma} vs {q.sigma}")
    return p.counts == q.counts


def gcd_of_vector(p: ParikhVector | Sequence[int]) -> int:
    """gcd of the nonzero letter counts; zero entries are skipped."""
    counts: Iterable[int] = p.counts if isinstance(p, ParikhVector) else p
    nonzero = [c for c in counts if c]
    if not nonzero:
        raise ValueError("gcd of an all-zero vector is undefined")
    return math.gcd(*nonzero)


def divisors_at_least(m: int, lower: int = 1) -> DivisorList:
    """All divisors d of m with d >= lower, ascending (trial division to sqrt m)."""
    if m < 1:
        raise ValueError(f"need a positive integer, got {m}")
    small: list[int] = []
    large: list[int] = []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
        d += 1
    values = small + large[::-1]
    return DivisorList(tuple(v for v in values if v >= lower))
