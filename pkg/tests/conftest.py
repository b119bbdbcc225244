import random

import pytest

from twinwidth.trigraph import Trigraph


def random_plain(n, p, rnd):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rnd.random() < p]
    return Trigraph.from_edges(n, edges)


def random_partial_sequence(G, steps, rnd):
    alive = list(G.vertices)
    seq = []
    for _ in range(min(steps, len(alive) - 1)):
        u, v = rnd.sample(alive, 2)
        seq.append((u, v))
        alive.remove(v)
    return seq


@pytest.fixture
def rnd():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
