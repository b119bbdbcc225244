import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_partial_sequence, random_plain
from twinwidth.generators import complete, cycle, paley, path, relabel
from twinwidth.trigraph import (
    SequenceError,
    Trigraph,
    apply_sequence,
    boundary_size,
    completion_steps,
    contract,
    max_red_degree,
    red_degree,
    symmetric_difference_size,
)


def brute_contract(G, u, v):
    """Edge sets of G/{u,v} from the three-case rule, built from scratch."""
    rest = [x for x in G.vertices if x not in (u, v)]
    black, red = set(), set()
    for a, b in G.black_edges:
        if u not in (a, b) and v not in (a, b):
            black.add((a, b))
    for a, b in G.red_edges:
        if u not in (a, b) and v not in (a, b):
            red.add((a, b))
    for x in rest:
        cu = "b" if G.has_edge(u, x) and not G.is_red(u, x) else ("r" if G.has_edge(u, x) else "-")
        cv = "b" if G.has_edge(v, x) and not G.is_red(v, x) else ("r" if G.has_edge(v, x) else "-")
        e = (min(u, x), max(u, x))
        if cu == cv == "b":
            black.add(e)
        elif cu == cv == "-":
            continue
        else:
            red.add(e)
    return sorted(rest + [u]), black, red


def test_contract_p3_twins():
    G = path(3)
    H = contract(G, 0, 2)
    assert H.vertices == [0, 1]
    assert H.black_edges == [(0, 1)]
    assert H.red_edges == []


def test_contract_p3_creates_red():
    H = contract(path(3), 0, 1)
    assert H.vertices == [0, 2]
    assert H.red_edges == [(0, 2)]
    assert red_degree(H, 0) == 1 and red_degree(H, 2) == 1


def test_contract_triangle():
    H = contract(complete(3), 1, 2)
    assert len(H) == 2 and H.black_edges == [(0, 1)] and H.red_edges == []


def test_contract_does_not_mutate():
    G = path(4)
    before = (G.vertices, G.black_edges)
    contract(G, 1, 2)
    assert (G.vertices, G.black_edges) == before


def test_contract_errors():
    G = path(3)
    with pytest.raises(ValueError):
        contract(G, 0, 0)
    with pytest.raises(KeyError):
        contract(G, 0, 9)


def test_paley5_pair_red_degree():
    H = contract(paley(5), 1, 4)
    assert red_degree(H, 1) == 2


def test_max_red_degree_plain_and_empty():
    assert max_red_degree(cycle(6)) == 0
    assert max_red_degree(Trigraph([])) == 0
    assert max_red_degree(Trigraph([3])) == 0


def test_red_degree_unknown_vertex():
    with pytest.raises(KeyError):
        red_degree(path(3), 7)


def test_trigraph_rejects_overlap_and_loops():
    with pytest.raises(ValueError):
        Trigraph([0, 1], [(0, 1)], [(1, 0)])
    with pytest.raises(ValueError):
        Trigraph([0, 1], [(0, 0)])
    with pytest.raises(ValueError):
        Trigraph([0, 1], [(0, 2)])


def test_boundary_examples():
    C5 = cycle(5)
    assert boundary_size(C5, C5.vertices) == 0
    assert boundary_size(C5, [0]) == 2
    assert boundary_size(C5, [0, 1]) == 2
    with pytest.raises(KeyError):
        boundary_size(C5, [8])


def test_symdiff_examples():
    assert symmetric_difference_size(complete(4), 0, 1) == 0
    assert symmetric_difference_size(path(4), 0, 1) == 1
    C5 = cycle(5)
    assert all(symmetric_difference_size(C5, u, v) == 2 for u in range(5) for v in range(u + 1, 5))
    red = contract(path(3), 0, 1)
    with pytest.raises(ValueError):
        symmetric_difference_size(red, 0, 2)
    with pytest.raises(ValueError):
        symmetric_difference_size(C5, 1, 1)


def test_apply_sequence_k4_width_zero():
    rep = apply_sequence(complete(4), [(0, 1), (2, 3), (0, 2)])
    assert rep.width == 0 and rep.complete


def test_apply_sequence_paley5():
    rep = apply_sequence(paley(5), [(1, 4), (2, 3), (0, 1), (0, 2)])
    assert rep.width == 2


def test_apply_sequence_p4_leaf_absorption():
    rep = apply_sequence(path(4), [(1, 0), (2, 3), (1, 2)])
    assert rep.width == 1
    assert rep.step_max_red_degrees == [1, 1, 0]


def test_apply_sequence_empty_is_identity():
    G = contract(path(3), 0, 1)
    rep = apply_sequence(G, [])
    assert rep.width == 1 == rep.initial_max_red_degree
    assert rep.sigma == {0: 0, 2: 2}


def test_apply_sequence_reports_failing_step():
    with pytest.raises(SequenceError) as exc:
        apply_sequence(path(4), [(0, 1), (2, 1)])
    assert exc.value.step == 1
    with pytest.raises(SequenceError):
        apply_sequence(path(4), [(0, 9)])
    with pytest.raises(SequenceError):
        apply_sequence(path(4), [(2, 2)])


def test_sigma_and_preimages():
    rep = apply_sequence(path(5), [(1, 0), (1, 2), (3, 4)])
    assert rep.sigma == {0: 1, 1: 1, 2: 1, 3: 3, 4: 3}
    assert rep.preimage_sizes == {1: 3, 3: 2}
    assert rep.preimage(1) == [0, 1, 2]


def test_completion_steps():
    assert completion_steps([5, 2, 9]) == [(2, 5), (2, 9)]
    assert apply_sequence(path(3), completion_steps([0, 1, 2])).complete


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 9), st.floats(0, 1), st.integers(0, 2**32 - 1))
def test_contract_matches_case_rule(n, p, seed):
    rnd = random.Random(seed)
    G = random_plain(n, p, rnd)
    for u, v in random_partial_sequence(G, n - 1, rnd):
        H = contract(G, u, v)
        verts, black, red = brute_contract(G, u, v)
        assert H.vertices == verts
        assert set(H.black_edges) == black and set(H.red_edges) == red
        assert not black & red
        G = H


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 10), st.floats(0, 1), st.integers(0, 2**32 - 1))
def test_report_invariants(n, p, seed):
    rnd = random.Random(seed)
    G = random_plain(n, p, rnd)
    seq = random_partial_sequence(G, rnd.randrange(n), rnd)
    rep = apply_sequence(G, seq)
    assert rep.width == max(rep.step_max_red_degrees + [rep.initial_max_red_degree])
    assert sum(rep.preimage_sizes.values()) == n
    assert set(rep.preimage_sizes) == set(rep.result.vertices)
    # replay by hand
    H = G
    for u, v in seq:
        H = contract(H, u, v)
    assert H == rep.result


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 10), st.floats(0, 1), st.integers(0, 2**32 - 1))
def test_twins_create_no_red(n, p, seed):
    rnd = random.Random(seed)
    G = random_plain(n, p, rnd)
    for u in G.vertices:
        for v in G.vertices:
            if u < v and G.neighbor_set(u) - {v} == G.neighbor_set(v) - {u}:
                assert contract(G, u, v).num_red_edges() == 0


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 10), st.floats(0, 1), st.integers(0, 2**32 - 1))
def test_relabel_equivariance(n, p, seed):
    rnd = random.Random(seed)
    G = random_plain(n, p, rnd)
    seq = random_partial_sequence(G, n - 1, rnd)
    image = list(range(100, 100 + n))
    rnd.shuffle(image)
    mapping = dict(zip(G.vertices, image))
    a = apply_sequence(G, seq)
    b = apply_sequence(relabel(G, mapping), [(mapping[u], mapping[v]) for u, v in seq])
    assert a.width == b.width and a.step_max_red_degrees == b.step_max_red_degrees


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 12), st.floats(0, 1), st.integers(0, 2**32 - 1))
def test_symdiff_equals_merged_red_degree(n, p, seed):
    rnd = random.Random(seed)
    G = random_plain(n, p, rnd)
    u, v = rnd.sample(G.vertices, 2)
    assert symmetric_difference_size(G, u, v) == red_degree(contract(G, u, v), u)
