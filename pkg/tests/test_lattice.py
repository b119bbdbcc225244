import itertools
from fractions import Fraction

import pytest

from twinwidth.lattice import (
    LatticeQuery,
    binomial,
    count_crossing_paths,
    count_crossing_paths_bruteforce,
    crossing_probability,
    crossing_probability_bound,
    crossing_probability_product,
)


def all_paths(a, b):
    """Every NE path as its explicit list of lattice points."""
    for north in itertools.combinations(range(a + b), b):
        x = y = 0
        pts = [(0, 0)]
        for i in range(a + b):
            if i not in north:
                x += 1
            else:
                y += 1
            pts.append((x, y))
        yield pts


def oracle_count(a, b, t):
    # a polyline meets a closed half-plane iff one of its vertices does
    return sum(
        1
        for pts in all_paths(a, b)
        if any(y >= x + t for x, y in pts) and any(y <= x + t for x, y in pts)
    )


def pascal(n):
    row = [1]
    for _ in range(n):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row


def test_binomial():
    assert binomial(4, 3) == 4
    assert binomial(3, 5) == 0
    assert binomial(5, -1) == 0
    assert [binomial(60, k) for k in range(61)] == pascal(60)
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_small_counts():
    assert count_crossing_paths(LatticeQuery(2, 2, 1)) == 4
    avoid = [pts for pts in all_paths(2, 2) if not any(y >= x + 1 for x, y in pts)]
    assert len(avoid) == 2  # EENN and ENEN
    assert count_crossing_paths(LatticeQuery(3, 2, 1)) == 5
    assert count_crossing_paths(LatticeQuery(3, 2, 3)) == 0


def test_counts_match_point_enumeration():
    for a in range(7):
        for b in range(7):
            for t in range(-3, b + 2):
                q = LatticeQuery(a, b, t)
                assert count_crossing_paths(q) == oracle_count(a, b, t), q
                assert count_crossing_paths_bruteforce(q) == oracle_count(a, b, t), q


def test_probability_examples():
    q = LatticeQuery(2, 2, 1)
    assert crossing_probability(q) == Fraction(2, 3) == crossing_probability_bound(q)
    q = LatticeQuery(2, 1, 2)
    assert crossing_probability(q) == 0 <= crossing_probability_bound(q)
    q = LatticeQuery(1, 4, 2)
    assert crossing_probability_bound(q) >= 1 >= crossing_probability(q)
    assert crossing_probability(LatticeQuery(0, 0, 1)) == 0
    with pytest.raises(ValueError):
        crossing_probability(LatticeQuery(2, 2, 0))
    with pytest.raises(ValueError):
        LatticeQuery(-1, 2, 1)


def test_product_form():
    for a in range(10):
        for b in range(10):
            for t in range(1, b + 1):
                if a + t > b:
                    q = LatticeQuery(a, b, t)
                    assert crossing_probability(q) == crossing_probability_product(q)
                    assert crossing_probability(q) <= crossing_probability_bound(q)
