"""The gathering process: block-structured geometric normal forms.

Working strand by strand from the top strand down, every crossing that
involves the distinguished strand k ("big") is pushed to the end of the word,
leaving a prefix whose crossings all avoid strand k ("small").  Iterating for
k = N, N-1, ..., 3 yields the unique form

    x1^m . w_3(x1,x2) . w_4(x1,x2,x3) ... w_N(x1,...,x_{N-1})

where block w_k entangles strand k only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .crossings import word_to_crossings
from .errors import NoRuleMatches, StepBudgetExceeded
from .words import BraidWord, free_reduce, reduce_letters

DEFAULT_STEP_BUDGET = 10**6


@dataclass(frozen=True)
class NormalForm:
    """Exponent of the leading x1 power plus the blocks w_3 .. w_N."""

    strands: int
    m: int
    blocks: tuple[BraidWord, ...] = ()

    def block(self, k: int) -> BraidWord:
        """Block w_k for 3 <= k <= strands."""
        return self.blocks[k - 3]


@dataclass(frozen=True)
class TUVW:
    """Decomposition of a word relative to a distinguished strand k.

    T carries only small crossings, U is a nonempty run of big crossings,
    V is a single letter whose crossing is small, W is the remainder.
    """

    strands: int
    k: int
    t: tuple[int, ...]
    u: tuple[int, ...]
    v: int
    w: tuple[int, ...]


def _big_flags(letters: tuple[int, ...], k: int) -> list[bool]:
    """Per-letter bigness: does the letter's crossing involve strand k?

    Strand k starts at position k and is only moved by its own (big)
    crossings, so its position can be tracked directly.
    """
    pos = k
    flags = []
    for t in letters:
        i = abs(t)
        if pos == i:
            flags.append(True)
            pos = i + 1
        elif pos == i + 1:
            flags.append(True)
            pos = i
        else:
            flags.append(False)
    return flags


def tuvw_decompose(w: BraidWord, k: int) -> TUVW | None:
    """Locate the first small crossing preceded by a big one.

    Returns None when every small crossing precedes every big crossing,
    i.e. the word is already gathered for strand k.
    """
    flags = _big_flags(w.letters, k)
    try:
        first_big = flags.index(True)
    except ValueError:
        return None
    for v_idx in range(first_big + 1, len(flags)):
        if not flags[v_idx]:
            return TUVW(
                w.strands,
                k,
                w.letters[:first_big],
                w.letters[first_big:v_idx],
                w.letters[v_idx],
                w.letters[v_idx + 1 :],
            )
    return None


def _pattern_rhs(a: int, b: int, c: int) -> tuple[int, ...]:
    """Replacement for the non-commuting configurations.

    ``a b`` are the last two letters before the gathered letter ``c``;
    the eight sign/shape configurations are exhaustive for freely reduced
    words, anything else raises NoRuleMatches.
    """
    ia, ib, ic = abs(a), abs(b), abs(c)
    sa = 1 if a > 0 else -1
    sb = 1 if b > 0 else -1
    sc = 1 if c > 0 else -1
    i = min(ib, ic)
    hi = i + 1
    if (ib, ic) == (i, hi):
        if ia == hi:
            if sb == sc:
                # x_{i+1}^d x_i^e x_{i+1}^e -> x_i^e x_{i+1}^e x_i^d
                return (i * sb, hi * sb, i * sa)
            if sa == sb:
                # x_{i+1}^e x_i^e x_{i+1}^d -> x_i^d x_{i+1}^e x_i^e
                return (i * sc, hi * sa, i * sa)
            if sa == sc and sb == -sa:
                # x_{i+1}^e x_i^-e x_{i+1}^e -> x_i^e x_{i+1}^e x_i^2e x_{i+1}^-2e x_i^-e
                return (i * sa, hi * sa, i * sa, i * sa, -hi * sa, -hi * sa, -i * sa)
        elif ia == i and sa == sb:
            # x_i^e x_i^e x_{i+1}^d -> x_{i+1}^d x_i^d x_{i+1}^2e x_i^-d
            return (hi * sc, i * sc, hi * sa, hi * sa, -i * sc)
    elif (ib, ic) == (hi, i):
        if ia == i:
            if sb == sc:
                # x_i^d x_{i+1}^e x_i^e -> x_{i+1}^e x_i^e x_{i+1}^d
                return (hi * sb, i * sb, hi * sa)
            if sa == sb:
                # x_i^e x_{i+1}^e x_i^d -> x_{i+1}^d x_i^e x_{i+1}^e
                return (hi * sc, i * sa, hi * sa)
            if sa == sc and sb == -sa:
                # x_i^e x_{i+1}^-e x_i^e -> x_{i+1}^e x_i^e x_{i+1}^2e x_i^-2e x_{i+1}^-e
                return (hi * sa, i * sa, hi * sa, hi * sa, -i * sa, -i * sa, -hi * sa)
        elif ia == hi and sa == sb:
            # x_{i+1}^e x_{i+1}^e x_i^d -> x_i^d x_{i+1}^d x_i^2e x_{i+1}^-d
            return (i * sc, hi * sc, i * sa, i * sa, -hi * sc)
    raise NoRuleMatches(f"no configuration matches ({a}, {b}, {c})")


def gather_step(w: BraidWord, k: int) -> BraidWord:
    """Apply one transformation moving the first stuck small crossing left."""
    d = tuvw_decompose(w, k)
    if d is None:
        raise ValueError(f"word is already gathered for strand {k}")
    z2 = d.u[-1]
    if abs(abs(z2) - abs(d.v)) != 1:
        # distant (or identical) generators commute: swap V past the
        # terminal letter of U
        letters = d.t + d.u[:-1] + (d.v, z2) + d.w
    else:
        if len(d.u) < 2:
            raise NoRuleMatches(
                f"single-letter big run before small letter in {w.letters}"
            )
        rhs = _pattern_rhs(d.u[-2], z2, d.v)
        letters = d.t + d.u[:-2] + rhs + d.w
    return BraidWord(w.strands, reduce_letters(letters))


def gather_strand(
    w: BraidWord, k: int, max_steps: int = DEFAULT_STEP_BUDGET
) -> tuple[BraidWord, BraidWord]:
    """Gather every crossing of strand k at the end of the word.

    Returns (prefix, block): the prefix carries only small crossings and the
    block only big ones.  ``w`` must be freely reduced.

    Letters are consumed left to right while the position of strand k and the
    accumulated small prefix / big run are maintained incrementally, so each
    elementary transformation costs O(1) instead of a full re-trace.
    """
    small: list[int] = []
    big: list[int] = []
    pos = k
    pending = list(reversed(w.letters))
    steps = 0
    while pending:
        t = pending.pop()
        i = abs(t)
        if pos == i or pos == i + 1:
            if big and big[-1] == -t:
                big.pop()
            else:
                big.append(t)
            # toggling by i covers both branches: a cancellation undoes the
            # move the popped letter made
            pos = i if pos == i + 1 else i + 1
            continue
        if not big:
            if small and small[-1] == -t:
                small.pop()
            else:
                small.append(t)
            continue
        # a small letter stuck behind the big run: bubble it left
        if steps >= max_steps:
            raise StepBudgetExceeded(max_steps, f"gathering strand {k}")
        steps += 1
        z2 = big.pop()
        j = abs(z2)
        pos = j if pos == j + 1 else j + 1
        if abs(j - i) != 1:
            # distant (or identical) generators commute
            pending.append(z2)
            pending.append(t)
        else:
            if not big:
                raise NoRuleMatches(
                    f"single-letter big run before small letter x{i}"
                )
            z1 = big.pop()
            j = abs(z1)
            pos = j if pos == j + 1 else j + 1
            pending.extend(reversed(_pattern_rhs(z1, z2, t)))
    return BraidWord(w.strands, tuple(small)), BraidWord(w.strands, tuple(big))


def normal_form(w: BraidWord, max_steps: int = DEFAULT_STEP_BUDGET) -> NormalForm:
    """Compute the unique block-structured normal form of ``w``."""
    cur = free_reduce(w)
    blocks: list[BraidWord] = []
    for k in range(w.strands, 2, -1):
        cur, block = gather_strand(cur, k, max_steps=max_steps)
        blocks.insert(0, block)
    # what is left uses x1 only and is freely reduced, hence a single power
    m = sum(1 if t > 0 else -1 for t in cur.letters)
    return NormalForm(w.strands, m, tuple(blocks))


def nf_to_word(nf: NormalForm) -> BraidWord:
    """Concatenate x1^m and the blocks; no cross-seam cancellation occurs."""
    sign = 1 if nf.m >= 0 else -1
    letters = (sign,) * abs(nf.m)
    for block in nf.blocks:
        letters += block.letters
    return BraidWord(nf.strands, letters)


def is_normal_form(w: BraidWord) -> bool:
    """True iff ``w`` is freely reduced and its crossings are block-ordered.

    In block order the higher strand of successive crossings never decreases:
    |1,2| crossings first, then |.,3|, then |.,4| and so on.
    """
    if not w.is_reduced():
        return False
    highs = [c.high for c in word_to_crossings(w).items]
    return all(a <= b for a, b in zip(highs, highs[1:]))


def _runs(letters: tuple[int, ...]) -> list[tuple[int, int]]:
    """Split into maximal runs of one generator: (index, signed exponent)."""
    runs: list[tuple[int, int]] = []
    for t in letters:
        i = abs(t)
        s = 1 if t > 0 else -1
        if runs and runs[-1][0] == i:
            runs[-1] = (i, runs[-1][1] + s)
        else:
            runs.append((i, s))
    return runs


def check_b3_parity(nf: NormalForm) -> bool:
    """Parity law for the single block of a 3-strand normal form.

    Written as x2^k1 x1^k2 x2^k3 ..., the leading exponent k1 is odd, every
    other non-terminal exponent is even, and the terminal exponent is
    unrestricted.  This is exactly what keeps the third strand involved in
    every crossing of the block: the first x2 run must park it at position 2
    (odd length) and each later non-terminal run must return it there (even
    length).
    """
    if nf.strands != 3:
        raise ValueError(f"parity check needs 3 strands, got {nf.strands}")
    letters = nf.block(3).letters
    if not letters:
        return True
    runs = _runs(letters)
    if runs[0][0] != 2:
        return False
    for r, (_, exp) in enumerate(runs[:-1], start=1):
        want_odd = r == 1
        if (abs(exp) % 2 == 1) != want_odd:
            return False
    return True
