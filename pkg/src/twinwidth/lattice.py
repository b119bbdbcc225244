"""North-East lattice paths crossing the line ``y = x + t``.

A path *intersects* the line when its point set meets both closed
half-planes ``y >= x + t`` and ``y <= x + t``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb


@dataclass(frozen=True)
class LatticeQuery:
    a: int  # East steps
    b: int  # North steps
    t: int  # line offset

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError("a and b must be nonnegative")


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def path_offsets(a: int, b: int):
    """Yield ``(min(y - x), max(y - x))`` for every NE path from (0,0) to (a,b)."""
    n = a + b
    for north in combinations(range(n), b):
        north = set(north)
        diff = lo = hi = 0
        for i in range(n):
            diff += 1 if i in north else -1
            if diff < lo:
                lo = diff
            elif diff > hi:
                hi = diff
        yield lo, hi


def count_crossing_paths_bruteforce(q: LatticeQuery) -> int:
    return sum(1 for lo, hi in path_offsets(q.a, q.b) if lo <= q.t <= hi)


def count_crossing_paths(q: LatticeQuery) -> int:
    if q.t >= 0 and q.a + q.t > q.b:
        return binomial(q.a + q.b, q.a + q.t)
    return count_crossing_paths_bruteforce(q)


def crossing_probability(q: LatticeQuery) -> Fraction:
    """Exact chance that a uniform NE path to (a, b) intersects ``y = x + t``."""
    if q.t < 1:
        raise ValueError("t must be positive")
    return Fraction(count_crossing_paths(q), binomial(q.a + q.b, q.a))


def crossing_probability_bound(q: LatticeQuery) -> Fraction:
    """``(b / (a + t)) ** t`` as an exact rational."""
    if q.t < 1:
        raise ValueError("t must be positive")
    return Fraction(q.b, q.a + q.t) ** q.t


def crossing_probability_product(q: LatticeQuery) -> Fraction:
    """Telescoped form ``prod_{i<t} (b - i) / (a + t - i)``."""
    out = Fraction(1)
    for i in range(q.t):
        out *= Fraction(q.b - i, q.a + q.t - i)
    return out
