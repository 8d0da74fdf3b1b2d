"""Random braids in normal form via per-block stopping-probability walks.

Each block is produced by a random walk that tracks the position of the
strand being entangled: at every step the walk stops with probability s or
emits, uniformly, one of the letters whose crossing involves that strand,
never the immediate inverse of the previous letter.  The output is a braid
already in normal form.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .gathering import NormalForm
from .words import BraidWord


@dataclass(frozen=True)
class RandomParams:
    """Strand count, stopping probabilities s_2 .. s_N and a seed."""

    strands: int
    stop: tuple[float, ...]
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "stop", tuple(self.stop))
        if self.strands < 1:
            raise ValueError(f"strand count must be >= 1, got {self.strands}")
        expected = max(self.strands - 1, 0)
        if len(self.stop) != expected:
            raise ValueError(
                f"need {expected} stopping probabilities for {self.strands} strands, "
                f"got {len(self.stop)}"
            )
        for s in self.stop:
            if not 0.0 < s <= 1.0:
                raise ValueError(f"stopping probability {s} not in (0, 1]")


def random_power(s: float, rng: random.Random) -> int:
    """Signed exponent of the leading x1 power.

    Stop at 0 with probability s; otherwise step to +1 or -1 with equal
    probability and keep extending away from zero until a stop.
    """
    if not 0.0 < s <= 1.0:
        raise ValueError(f"stopping probability {s} not in (0, 1]")
    if rng.random() < s:
        return 0
    m = 1 if rng.random() < 0.5 else -1
    while rng.random() >= s:
        m += 1 if m > 0 else -1
    return m


def allowed_moves(k: int, letters: tuple[int, ...]) -> tuple[int, ...]:
    """Letters that may extend a partial block for strand k+1.

    A letter is allowed when its crossing involves the distinguished strand
    (tracked by position) and it is not the immediate inverse of the previous
    letter.
    """
    p = k + 1  # position of the distinguished strand
    for t in letters:
        p = p - 1 if abs(t) == p - 1 else p + 1
    last = letters[-1] if letters else 0
    return tuple(
        q * sign
        for q in (p - 1, p)
        if 1 <= q <= k
        for sign in (1, -1)
        if q * sign != -last
    )


def random_block(
    k: int, s: float, rng: random.Random, strands: int | None = None
) -> BraidWord:
    """Random block entangling strand k+1 into the first k, over x_1 .. x_k.

    The walk starts with the distinguished strand at position k+1, so the
    first letter is always x_k^{+-1}.
    """
    if not 0.0 < s <= 1.0:
        raise ValueError(f"stopping probability {s} not in (0, 1]")
    if k < 1:
        raise ValueError(f"block index must be >= 1, got {k}")
    if strands is None:
        strands = k + 1
    letters: list[int] = []
    while rng.random() >= s:
        moves = allowed_moves(k, tuple(letters))
        letters.append(moves[rng.randrange(len(moves))])
    return BraidWord(strands, tuple(letters))


def random_braid(params: RandomParams) -> NormalForm:
    """Sample a braid; the result is a fixed point of the gathering process."""
    rng = random.Random(params.seed)
    n = params.strands
    if n < 2:
        return NormalForm(n, 0)
    m = random_power(params.stop[0], rng)
    blocks = tuple(
        random_block(k, params.stop[k - 1], rng, strands=n) for k in range(2, n)
    )
    return NormalForm(n, m, blocks)
