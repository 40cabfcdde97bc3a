import pytest

from abelianperiods import Alphabet, Word

# Running example used across the suite: a binary word of length 30 with
# letter counts (15, 15), minimal candidate period 2, and periods {10, 30}.
EXAMPLE_TEXT = b"abaababbbabaabbabbaaabbababbaa"

EXAMPLE_L = [1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0,
             1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 0]

EXAMPLE_FACTORS = [b"ab", b"aababb", b"ba", b"ba", b"ab", b"ba",
                   b"bbaa", b"ab", b"ba", b"ba", b"bbaa"]


def word(text: bytes, alphabet: Alphabet | None = None) -> Word:
    return Word.from_bytes(text, alphabet)


@pytest.fixture
def example_word() -> Word:
    return word(EXAMPLE_TEXT)
