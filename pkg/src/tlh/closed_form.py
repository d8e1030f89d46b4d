"""Direct enumeration of the Hochschild-degree-zero series of full twists.

The a = 0 slice of the n-strand full twist series has a closed form: a sum
over level functions, i.e. assignments of a nonnegative integer level to
each of the n strands.  A level function sigma contributes
t^(equal_pairs + step_pairs) q^(total) where

    equal_pairs  =  number of pairs assigned the same level
    step_pairs   =  number of pairs i < j with sigma(j) = sigma(i) + 1
    total        =  sum of all levels

Truncating at q-degree qmax means enumerating exactly the level functions
with total <= qmax, so the truncation is complete, never approximate.  This
module is deliberately independent of the recursion engine; agreement of the
two is one of the package's acceptance criteria.
"""

from __future__ import annotations

from math import comb
from typing import Iterator, NamedTuple, Sequence

from .poly import UNIT, Polynomial

__all__ = ["LevelStats", "level_stats", "level_functions", "hochschild_zero_series"]


class LevelStats(NamedTuple):
    equal_pairs: int
    step_pairs: int
    total: int


def level_stats(levels: Sequence[int]) -> LevelStats:
    """The three statistics of a level function."""
    if not levels or any(v < 0 for v in levels):
        raise ValueError("levels must be a nonempty sequence of nonnegative ints")
    counts: dict[int, int] = {}
    for v in levels:
        counts[v] = counts.get(v, 0) + 1
    equal = sum(comb(m, 2) for m in counts.values())
    step = 0
    for j in range(len(levels)):
        for i in range(j):
            if levels[j] == levels[i] + 1:
                step += 1
    return LevelStats(equal, step, sum(levels))


def level_functions(n: int, budget: int) -> Iterator[tuple[int, ...]]:
    """All level functions on n strands with total <= budget, lexicographically."""
    if n < 1:
        raise ValueError("n must be >= 1")

    def rec(prefix: tuple[int, ...], left: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield prefix
            return
        for v in range(left + 1):
            yield from rec(prefix + (v,), left - v)

    yield from rec((), budget)


def hochschild_zero_series(n: int, qmax: int) -> Polynomial:
    """Truncated series of the degree-zero part for the n-strand full twist.

    Exact in t; complete in q up to and including q^qmax.
    """
    if qmax < 0:
        raise ValueError("qmax must be >= 0")
    terms: dict[tuple[int, int, int], int] = {}
    for levels in level_functions(n, qmax):
        s = level_stats(levels)
        key = (s.total * UNIT, 0, (s.equal_pairs + s.step_pairs) * UNIT)
        terms[key] = terms.get(key, 0) + 1
    return Polynomial(terms)
