"""Shared helpers for the test suite."""

from __future__ import annotations

import random

import pytest

from braidforms.oracle import random_word
from braidforms.words import BraidWord


def rand_words(strands: int, count: int, max_len: int, seed: int) -> list[BraidWord]:
    rng = random.Random(seed)
    return [
        random_word(strands, rng.randrange(1, max_len + 1), rng)
        for _ in range(count)
    ]


@pytest.fixture(scope="session")
def word_pool() -> dict[int, list[BraidWord]]:
    """A modest pool of random freely reduced words per strand count."""
    return {n: rand_words(n, 120, 18, seed=100 + n) for n in (3, 4, 5)}
