"""Braid words over a fixed strand count, free-group operations and the
permutation homomorphism.

A word in B_N (generators x_1 .. x_{N-1}) is stored as a sequence of signed
nonzero integers: the letter ``t`` means x_|t| raised to sign(t).  Words are
immutable values; equality is letter-for-letter, never group equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple


class Generator(NamedTuple):
    """A single letter x_index^sign with sign in {+1, -1}."""

    index: int
    sign: int

    @property
    def token(self) -> int:
        return self.index * self.sign


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid group on ``strands`` strands.

    ``letters`` holds signed integers; letter t stands for x_|t|^sign(t)
    with 1 <= |t| <= strands - 1.
    """

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"strand count must be >= 1, got {self.strands}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for t in self.letters:
            if t == 0 or abs(t) > self.strands - 1:
                raise ValueError(
                    f"letter {t} out of range for {self.strands} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def generators(self) -> list[Generator]:
        return [Generator(abs(t), 1 if t > 0 else -1) for t in self.letters]

    def is_reduced(self) -> bool:
        return all(a != -b for a, b in zip(self.letters, self.letters[1:]))


def word(strands: int, letters: Iterable[int] = ()) -> BraidWord:
    """Convenience constructor."""
    return BraidWord(strands, tuple(letters))


def reduce_letters(letters: Iterable[int]) -> tuple[int, ...]:
    """Freely reduce a letter sequence with a single stack pass."""
    out: list[int] = []
    for t in letters:
        if out and out[-1] == -t:
            out.pop()
        else:
            out.append(t)
    return tuple(out)


def free_reduce(w: BraidWord) -> BraidWord:
    """Delete adjacent x_i^e x_i^-e pairs until none remain.

    A single left-to-right pass with a pending-output stack suffices: free
    reduction is confluent, so the result does not depend on deletion order.
    """
    return BraidWord(w.strands, reduce_letters(w.letters))


def inverse(w: BraidWord) -> BraidWord:
    """Reverse the letters and negate the signs."""
    return BraidWord(w.strands, tuple(-t for t in reversed(w.letters)))


def concat(u: BraidWord, v: BraidWord, reduce: bool = False) -> BraidWord:
    """Juxtapose two words over the same strand count."""
    if u.strands != v.strands:
        raise ValueError(
            f"strand count mismatch: {u.strands} vs {v.strands}"
        )
    letters = u.letters + v.letters
    if reduce:
        letters = reduce_letters(letters)
    return BraidWord(u.strands, letters)


def permutation(w: BraidWord) -> tuple[int, ...]:
    """Bottom arrangement of strand labels induced by ``w``.

    Entry at position p (0-based) is the label of the strand occupying
    position p+1 at the bottom of the diagram; strands are numbered by
    their top positions.  The empty word maps to (1, 2, ..., N).
    """
    arr = list(range(1, w.strands + 1))
    for t in w.letters:
        i = abs(t) - 1
        arr[i], arr[i + 1] = arr[i + 1], arr[i]
    return tuple(arr)


def identity_arrangement(strands: int) -> tuple[int, ...]:
    return tuple(range(1, strands + 1))


def is_pure(w: BraidWord) -> bool:
    """True iff ``w`` induces the identity permutation of strands."""
    return permutation(w) == identity_arrangement(w.strands)


def aij(i: int, j: int, strands: int) -> BraidWord:
    """Pure-braid generator entangling strand j with strand i only.

    Returns the representative x_{j-1} ... x_{i+1} x_i^2 x_{i+1}^-1 ... x_{j-1}^-1;
    for j == i + 1 this is x_i^2.
    """
    if not (1 <= i < j <= strands):
        raise ValueError(f"need 1 <= i < j <= {strands}, got i={i}, j={j}")
    left = list(range(j - 1, i, -1))
    return BraidWord(strands, tuple(left) + (i, i) + tuple(-q for q in reversed(left)))
