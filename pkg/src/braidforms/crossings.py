"""Crossing-sequence encoding of braid words.

A letter of a braid word crosses two concrete strands; which two depends on
everything before it.  Recording the strand pairs instead of the letters gives
an alternative encoding of the same braid, and validity of such a sequence is
membership in a finite automaton over strand arrangements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .words import BraidWord, identity_arrangement, permutation


class Crossing(NamedTuple):
    """The crossing of strands ``low`` and ``high`` (low < high) with a sign."""

    low: int
    high: int
    sign: int

    def inverse(self) -> "Crossing":
        return Crossing(self.low, self.high, -self.sign)


def crossing(a: int, b: int, sign: int = 1) -> Crossing:
    """Build a crossing from an unordered strand pair."""
    if a == b:
        raise ValueError(f"crossing needs two distinct strands, got {a}, {b}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return Crossing(min(a, b), max(a, b), sign)


@dataclass(frozen=True)
class CrossingSequence:
    strands: int
    items: tuple[Crossing, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))
        for c in self.items:
            if not (1 <= c.low < c.high <= self.strands):
                raise ValueError(f"crossing {c} out of range for {self.strands} strands")
            if c.sign not in (1, -1):
                raise ValueError(f"bad sign in crossing {c}")

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)


class InvalidCrossing(ValueError):
    """A crossing whose strands are not adjacent at its point in the trace.

    ``position`` is 1-based.
    """

    def __init__(self, position: int, item: Crossing):
        self.position = position
        self.item = item
        super().__init__(f"invalid crossing at position {position}: {item}")


def word_to_crossings(w: BraidWord) -> CrossingSequence:
    """Trace the arrangement and record the strand pair of every letter."""
    arr = list(range(1, w.strands + 1))
    items = []
    for t in w.letters:
        i = abs(t) - 1
        r, s = arr[i], arr[i + 1]
        items.append(crossing(r, s, 1 if t > 0 else -1))
        arr[i], arr[i + 1] = arr[i + 1], arr[i]
    return CrossingSequence(w.strands, tuple(items))


def crossings_to_word(c: CrossingSequence) -> BraidWord:
    """Recover the braid word, or raise InvalidCrossing.

    Each crossing requires its two strands to occupy adjacent positions at its
    point in the trace; the emitted letter is the position of the lower one.
    """
    arr = list(range(1, c.strands + 1))
    letters = []
    for pos, item in enumerate(c.items, start=1):
        p = arr.index(item.low)
        q = arr.index(item.high)
        if abs(p - q) != 1:
            raise InvalidCrossing(pos, item)
        lo = min(p, q)
        letters.append((lo + 1) * item.sign)
        arr[lo], arr[lo + 1] = arr[lo + 1], arr[lo]
    return BraidWord(c.strands, tuple(letters))


def validate(c: CrossingSequence) -> bool:
    """True iff ``c`` is the crossing sequence of some braid word.

    Runs the single path through the arrangement automaton incrementally;
    the full automaton (N! states) is never materialized here.
    """
    try:
        crossings_to_word(c)
    except InvalidCrossing:
        return False
    return True


def final_arrangement(c: CrossingSequence) -> tuple[int, ...]:
    """Automaton state after consuming a valid sequence."""
    return permutation(crossings_to_word(c))


def classify(c: CrossingSequence, k: int) -> tuple[str, ...]:
    """Label each item 'big' or 'small' relative to the distinguished strand k."""
    if not (1 <= k <= c.strands):
        raise ValueError(f"strand {k} out of range for {c.strands} strands")
    return tuple("big" if k in (x.low, x.high) else "small" for x in c.items)


def is_big(item: Crossing, k: int) -> bool:
    return k in (item.low, item.high)


def canonical_index(x: Crossing) -> int:
    """Rank of the strand pair in the order |1,2| < |1,3| < |2,3| < |1,4| < ...

    Pairs are sorted by high strand, then low strand; ranks start at 1.
    """
    return (x.high - 1) * (x.high - 2) // 2 + x.low


def materialize_automaton(strands: int) -> dict[tuple[int, ...], dict[Crossing, tuple[int, ...]]]:
    """Full transition table of the validity automaton.

    States are arrangements, the start state is the identity, and every state
    accepts.  Intended for small strand counts only; the state space has N!
    elements.
    """
    if strands > 5:
        raise ValueError("automaton materialization is limited to <= 5 strands")
    start = identity_arrangement(strands)
    table: dict[tuple[int, ...], dict[Crossing, tuple[int, ...]]] = {}
    frontier = [start]
    while frontier:
        state = frontier.pop()
        if state in table:
            continue
        edges: dict[Crossing, tuple[int, ...]] = {}
        for p in range(strands - 1):
            r, s = state[p], state[p + 1]
            nxt = list(state)
            nxt[p], nxt[p + 1] = nxt[p + 1], nxt[p]
            nxt_t = tuple(nxt)
            for sign in (1, -1):
                edges[crossing(r, s, sign)] = nxt_t
            frontier.append(nxt_t)
        table[state] = edges
    return table


def sequence(strands: int, pairs: Iterable[tuple[int, int, int]]) -> CrossingSequence:
    """Build a CrossingSequence from (low, high, sign) triples."""
    return CrossingSequence(strands, tuple(crossing(a, b, s) for a, b, s in pairs))
