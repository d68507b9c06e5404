import random

import pytest

from artin_bn.words import Alphabet, Family, Word


def random_word(rng: random.Random, alphabet: Alphabet, length: int) -> Word:
    idx = list(alphabet.indices)
    return Word.make(alphabet, [(rng.choice(idx), rng.choice((1, -1))) for _ in range(length)])


@pytest.fixture
def rng():
    return random.Random(12345)
