"""Confluent rewriting of crossing sequences.

The rules act directly on sequences of crossings: three-crossing
reorderings (I1-I4), the swap of commuting crossings (COM) and cancellation
of adjacent inverse crossings (D).  Every maximal chain of rewrites from a
valid sequence terminates in the same residue, which is the block-ordered
normal form of the underlying braid.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .crossings import Crossing, CrossingSequence, crossing, validate
from .errors import PatternMismatch, StepBudgetExceeded

DEFAULT_STEP_BUDGET = 10**6

# tie-break order for sites at the same position
_TEMPLATE_ORDER = {"D": 0, "COM": 1, "I1": 2, "I2": 3, "I3": 4, "I4": 5}


@dataclass(frozen=True)
class RewriteRule:
    """A bound rule instance: template name, matched length, replacement."""

    template: str
    length: int
    replacement: tuple[Crossing, ...]


@dataclass(frozen=True)
class RewriteSite:
    position: int
    rule: RewriteRule


@dataclass(frozen=True)
class Strategy:
    """Site-selection policy for residue computation."""

    kind: str  # "leftmost", "rightmost" or "random"
    seed: int | None = None

    def __post_init__(self):
        if self.kind not in ("leftmost", "rightmost", "random"):
            raise ValueError(f"unknown strategy kind {self.kind!r}")
        if self.kind == "random" and self.seed is None:
            raise ValueError("random strategy needs a seed")


LEFTMOST = Strategy("leftmost")
RIGHTMOST = Strategy("rightmost")


def _match_pair(u: Crossing, v: Crossing, use_com: bool) -> RewriteRule | None:
    if (u.low, u.high) == (v.low, v.high) and u.sign == -v.sign:
        return RewriteRule("D", 2, ())
    if use_com and len({u.low, u.high, v.low, v.high}) == 4 and v.high < u.high:
        return RewriteRule("COM", 2, (v, u))
    return None


def _match_triple(u: Crossing, v: Crossing, w: Crossing) -> RewriteRule | None:
    if u.high != v.high:
        return None
    k = u.high
    j, l = u.low, v.low
    if j != l:
        if {w.low, w.high} != {j, l}:
            return None
        if v.sign == w.sign:
            e, d = v.sign, u.sign
            return RewriteRule(
                "I1", 3, (crossing(l, j, e), crossing(l, k, e), crossing(j, k, d))
            )
        if u.sign == v.sign:
            e, d = u.sign, w.sign
            return RewriteRule(
                "I2", 3, (crossing(l, j, d), crossing(l, k, e), crossing(j, k, e))
            )
        # remaining sign pattern: u and w agree, v is their inverse
        e = u.sign
        return RewriteRule(
            "I4",
            3,
            (
                crossing(l, j, e),
                crossing(l, k, e),
                crossing(j, k, e),
                crossing(j, k, e),
                crossing(l, k, -e),
                crossing(l, k, -e),
                crossing(j, k, -e),
            ),
        )
    # u and v are the same crossing; same sign (opposite signs fall to D)
    if u.sign != v.sign:
        return None
    if j not in (w.low, w.high):
        return None
    l = w.low if w.high == j else w.high
    if l >= k:
        return None
    e, d = u.sign, w.sign
    return RewriteRule(
        "I3",
        3,
        (
            crossing(l, j, d),
            crossing(l, k, d),
            crossing(j, k, e),
            crossing(j, k, e),
            crossing(l, k, -d),
        ),
    )


def _match_at(
    items: tuple[Crossing, ...], p: int, use_com: bool
) -> RewriteRule | None:
    rules = []
    if p + 1 < len(items):
        r = _match_pair(items[p], items[p + 1], use_com)
        if r is not None:
            rules.append(r)
    if p + 2 < len(items):
        r = _match_triple(items[p], items[p + 1], items[p + 2])
        if r is not None:
            rules.append(r)
    if not rules:
        return None
    return min(rules, key=lambda r: _TEMPLATE_ORDER[r.template])


def applicable_sites(
    c: CrossingSequence, use_com: bool = True
) -> list[RewriteSite]:
    """All matching sites in position order."""
    sites = []
    for p in range(len(c.items)):
        rule = _match_at(c.items, p, use_com)
        if rule is not None:
            sites.append(RewriteSite(p, rule))
    return sites


def apply_rule(c: CrossingSequence, site: RewriteSite) -> CrossingSequence:
    """Splice the rule's replacement over its matched span."""
    current = _match_at(c.items, site.position, use_com=True)
    if current is None or current != site.rule:
        raise PatternMismatch(f"site {site} does not match the sequence")
    p = site.position
    items = c.items[:p] + site.rule.replacement + c.items[p + site.rule.length :]
    return CrossingSequence(c.strands, items)


def residue(
    c: CrossingSequence,
    strategy: Strategy = LEFTMOST,
    max_steps: int = DEFAULT_STEP_BUDGET,
    use_com: bool = True,
) -> CrossingSequence:
    """Rewrite until no rule applies.

    By confluence the result does not depend on the strategy (when the full
    rule set is enabled).
    """
    if not validate(c):
        raise ValueError("sequence does not correspond to a braid word")
    rng = random.Random(strategy.seed) if strategy.kind == "random" else None
    steps = 0
    while True:
        sites = applicable_sites(c, use_com=use_com)
        if not sites:
            return c
        if steps >= max_steps:
            raise StepBudgetExceeded(max_steps, "computing residue")
        if strategy.kind == "leftmost":
            site = sites[0]
        elif strategy.kind == "rightmost":
            site = sites[-1]
        else:
            site = sites[rng.randrange(len(sites))]
        p = site.position
        c = CrossingSequence(
            c.strands,
            c.items[:p] + site.rule.replacement + c.items[p + site.rule.length :],
        )
        steps += 1


EXCEEDED = "exceeded"


def max_chain_length(c: CrossingSequence, cap: int) -> int | str:
    """Length of the longest rewrite chain, by exhaustive search.

    Returns EXCEEDED as soon as any chain passes ``cap``.  Hard-limited to
    tiny inputs; the search is exponential.
    """
    if len(c.items) > 8 or c.strands > 4:
        raise ValueError("exhaustive chain search is limited to length <= 8, N <= 4")

    memo: dict[tuple[Crossing, ...], int] = {}

    def longest(items: tuple[Crossing, ...]) -> int:
        if items in memo:
            return memo[items]
        best = 0
        for p in range(len(items)):
            rule = _match_at(items, p, use_com=True)
            if rule is None:
                continue
            nxt = items[:p] + rule.replacement + items[p + rule.length :]
            sub = longest(nxt)
            if sub == -1 or sub + 1 > cap:
                memo[items] = -1
                return -1
            best = max(best, sub + 1)
        memo[items] = best
        return best

    result = longest(c.items)
    return EXCEEDED if result == -1 else result
