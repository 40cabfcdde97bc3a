"""All full Abelian periods of a word.

Two fast algorithms (a scaled-factor divisor scan and a proportional-prefix
baseline), a brute-force oracle, a seeded generator of planted inputs, and a
benchmark harness with a CLI (``abper``).
"""

from .backend import active_backend, available_backends
from .core import (
    Alphabet,
    DivisorList,
    ParikhVector,
    PeriodSet,
    Word,
    divisors_at_least,
    gcd_of_vector,
    parikh_equal,
    parikh_vector,
)
from .lfap import candidate_set, full_abelian_periods_lfap, is_proportional_to_n
from .oracle import full_abelian_periods_bruteforce, is_full_abelian_period
from .qlfap import analyze, full_abelian_periods_qlfap, smallest_full_abelian_period
from .scaled import ScaledProfile, compute_l, irreducible_factorization
from .wordgen import GenSpec, generate, repeated_alphabet_word

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "DivisorList",
    "GenSpec",
    "ParikhVector",
    "PeriodSet",
    "ScaledProfile",
    "Word",
    "active_backend",
    "analyze",
    "available_backends",
    "candidate_set",
    "compute_l",
    "divisors_at_least",
    "full_abelian_periods_bruteforce",
    "full_abelian_periods_lfap",
    "full_abelian_periods_qlfap",
    "gcd_of_vector",
    "generate",
    "irreducible_factorization",
    "is_full_abelian_period",
    "is_proportional_to_n",
    "parikh_equal",
    "parikh_vector",
    "repeated_alphabet_word",
    "smallest_full_abelian_period",
    "__version__",
]
