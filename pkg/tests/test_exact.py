import functools
import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_plain
from twinwidth.bounds import best_upper_bound, lower_bound_min_symdiff
from twinwidth.exact import (
    Unknown,
    canonical_key,
    decide_at_most,
    exact_solve,
    exact_twinwidth,
    _to_masks,
)
from twinwidth.generators import complement, complete, cycle, gnp, paley, path, relabel, star_subdivision
from twinwidth.structure import is_cograph
from twinwidth.trigraph import Trigraph, apply_sequence, contract


def brute_tww(G):
    """Minimum width over every contraction sequence, by plain recursion."""

    @functools.lru_cache(maxsize=None)
    def best(verts, black, red):
        H = Trigraph(verts, black, red)
        if len(verts) == 1:
            return 0
        out = None
        for u, v in itertools.combinations(verts, 2):
            K = contract(H, u, v)
            w = max(K.max_red_degree(), best(tuple(K.vertices), tuple(K.black_edges), tuple(K.red_edges)))
            out = w if out is None else min(out, w)
        return out

    return best(tuple(G.vertices), tuple(G.black_edges), tuple(G.red_edges))


def from_nx(g):
    return Trigraph.from_edges(g.number_of_nodes(), list(g.edges()))


def test_small_examples():
    assert exact_twinwidth(path(4)) == 1
    assert exact_twinwidth(star_subdivision(3)) == 2
    assert exact_twinwidth(paley(5)) == 2
    assert exact_twinwidth(complete(6)) == 0
    assert exact_twinwidth(Trigraph([0])) == 0


def test_decide_examples():
    assert decide_at_most(path(4), 0).feasible is False
    assert decide_at_most(complete(7), 0).feasible is True
    assert decide_at_most(cycle(5), 1).feasible is False
    with pytest.raises(ValueError):
        decide_at_most(path(3), -1)


def test_paley_exact():
    assert exact_twinwidth(paley(9)) == 4
    assert exact_twinwidth(paley(13)) == 6


def test_budget_gives_unknown():
    G = gnp(50, 0.5, 1)
    r = exact_twinwidth(G, node_budget=10)
    assert isinstance(r, Unknown)
    assert lower_bound_min_symdiff(G) <= r.best_lower <= r.best_upper
    assert r.best_upper == best_upper_bound(G).width
    with pytest.raises(TypeError):
        bool(r)
    d = decide_at_most(random_plain(12, 0.5, random.Random(1)), 2, node_budget=1)
    assert d.feasible in (None, False)


def test_red_input_rejected():
    with pytest.raises(ValueError):
        exact_solve(contract(path(3), 0, 1))


@pytest.mark.parametrize("seed", range(40))
def test_matches_brute_force(seed):
    rnd = random.Random(seed)
    G = random_plain(rnd.randint(2, 6), rnd.random(), rnd)
    assert exact_twinwidth(G) == brute_tww(G)


def test_atlas_bracket_and_certificates():
    for g in nx.graph_atlas_g()[1:]:
        if not nx.is_connected(g):
            continue
        G = from_nx(g)
        r = exact_solve(G)
        assert r.value is not None
        assert apply_sequence(G, r.certificate).width == r.value
        if len(G) >= 2:
            assert lower_bound_min_symdiff(G) <= r.value
        assert r.value <= best_upper_bound(G).width
        assert (r.value == 0) == is_cograph(G)


def test_random_bracket():
    rnd = random.Random(77)
    for _ in range(200):
        G = random_plain(rnd.randint(2, 10), rnd.random(), rnd)
        v = exact_twinwidth(G)
        assert lower_bound_min_symdiff(G) <= v <= best_upper_bound(G).width


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 9), st.floats(0, 1), st.integers(0, 2**32))
def test_complement_and_relabel_invariance(n, p, seed):
    rnd = random.Random(seed)
    G = random_plain(n, p, rnd)
    v = exact_twinwidth(G)
    assert exact_twinwidth(complement(G)) == v
    image = list(range(n))
    rnd.shuffle(image)
    assert exact_twinwidth(relabel(G, dict(zip(G.vertices, image)))) == v


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 9), st.floats(0, 1), st.integers(0, 2**32))
def test_decision_monotone_and_sound(n, p, seed):
    G = random_plain(n, p, random.Random(seed))
    prev = False
    for d in range(n):
        dec = decide_at_most(G, d)
        assert dec.feasible is not None
        if prev:
            assert dec.feasible
        if dec.feasible:
            rep = apply_sequence(G, dec.certificate)
            assert rep.complete and rep.width <= d
        prev = dec.feasible


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 10), st.floats(0, 1), st.integers(0, 2**32))
def test_canonical_key_relabel_invariant(n, p, seed):
    rnd = random.Random(seed)
    G = random_plain(n, p, rnd)
    G = contract(G, *rnd.sample(G.vertices, 2))
    image = list(range(50, 50 + len(G)))
    rnd.shuffle(image)
    H = relabel(G, dict(zip(G.vertices, image)))
    assert canonical_key(_to_masks(G)[1]) == canonical_key(_to_masks(H)[1])


def test_canonical_key_separates_non_isomorphic():
    a = canonical_key(_to_masks(path(5))[1])
    b = canonical_key(_to_masks(star_subdivision(2))[1])
    c = canonical_key(_to_masks(Trigraph.from_edges(5, [(0, 1), (1, 2), (2, 0), (3, 4)]))[1])
    assert a == b  # star_subdivision(2) is P5
    assert a != c
