import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_plain
from twinwidth.generators import (
    caterpillar,
    complement,
    cycle,
    path,
    random_caterpillar,
    random_tree,
    random_unicyclic,
    star,
    star_subdivision,
)
from twinwidth.structure import (
    caterpillar_spine,
    caterpillar_steps,
    cograph_steps,
    components,
    find_cycle,
    has_induced_p4,
    has_induced_star_subdivision,
    is_caterpillar,
    is_caterpillar_forest,
    is_cograph,
    is_forest,
    is_tree,
    join_components,
    max_cycles_per_component,
    tree_steps,
    twin_reduction,
    unicyclic_steps,
)
from twinwidth.trigraph import Trigraph, apply_sequence

CLAW_SUBDIVISION = nx.Graph([(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


def nx_graph(G):
    g = nx.Graph()
    g.add_nodes_from(G.vertices)
    g.add_edges_from(G.edges)
    return g


def caterpillar_oracle(T):
    """No subgraph isomorphic to the subdivided claw."""
    gm = nx.algorithms.isomorphism.GraphMatcher(nx_graph(T), CLAW_SUBDIVISION)
    return not gm.subgraph_is_monomorphic()


def test_components_and_cycles():
    G = Trigraph.from_edges(7, [(0, 1), (1, 2), (2, 0), (3, 4)])
    assert components(G) == [[0, 1, 2], [3, 4], [5], [6]]
    assert max_cycles_per_component(G) == 1
    assert not is_forest(G)
    assert is_tree(path(5)) and not is_tree(cycle(4))


def test_cograph_examples():
    assert is_cograph(star(3))
    assert not is_cograph(path(4))
    assert apply_sequence(star(3), cograph_steps(star(3))).width == 0
    assert cograph_steps(path(4)) is None


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 9), st.floats(0, 1), st.integers(0, 2**32))
def test_cograph_iff_no_induced_p4(n, p, seed):
    G = random_plain(n, p, random.Random(seed))
    assert is_cograph(G) == (not has_induced_p4(G))
    assert is_cograph(G) == is_cograph(complement(G))
    steps = cograph_steps(G)
    if steps is not None:
        rep = apply_sequence(G, steps)
        assert rep.complete and rep.width == 0


def test_twin_reduction_is_red_free():
    G = random_plain(12, 0.3, random.Random(5))
    steps, H = twin_reduction(G)
    rep = apply_sequence(G, steps)
    assert rep.width == 0 and rep.result == H


def test_caterpillar_examples():
    assert is_caterpillar(path(5))
    assert not is_caterpillar(star_subdivision(3))
    assert is_caterpillar(star(4))
    assert caterpillar_spine(caterpillar([1, 2, 0, 3])) is not None
    with pytest.raises(ValueError):
        is_caterpillar(cycle(5))
    with pytest.raises(ValueError):
        caterpillar_steps(star_subdivision(3))


@pytest.mark.parametrize("seed", range(60))
def test_caterpillar_test_matches_subgraph_oracle(seed):
    T = random_tree(random.Random(seed).randint(1, 14), seed)
    assert is_caterpillar(T) == caterpillar_oracle(T)
    if is_caterpillar(T):
        assert apply_sequence(T, caterpillar_steps(T)).width <= 1


@pytest.mark.parametrize("seed", range(40))
def test_tree_steps_width_two_root_last(seed):
    rnd = random.Random(seed)
    T = random_tree(rnd.randint(1, 120), seed)
    root = rnd.choice(T.vertices)
    seq = tree_steps(T, root)
    rep = apply_sequence(T, seq)
    assert rep.complete and rep.width <= 2
    assert all(root not in s for s in seq[:-1])


def test_tree_steps_non_tree():
    with pytest.raises(ValueError):
        tree_steps(cycle(4), 0)


def test_find_cycle():
    G = Trigraph.from_edges(8, cycle(5).edges + [(0, 5), (5, 6), (2, 7)])
    cyc = find_cycle(G, G.vertices)
    assert sorted(cyc) == [0, 1, 2, 3, 4]
    assert all(G.has_edge(cyc[i], cyc[(i + 1) % 5]) for i in range(5))


@pytest.mark.parametrize("seed", range(40))
def test_unicyclic_width_two(seed):
    G = random_unicyclic(random.Random(seed).randint(3, 60), seed)
    rep = apply_sequence(G, unicyclic_steps(G))
    assert rep.complete and rep.width <= 2


def test_unicyclic_rejects_two_cycles():
    G = Trigraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    with pytest.raises(ValueError):
        unicyclic_steps(G)


def test_join_components_multi():
    G = Trigraph.from_edges(9, [(0, 1), (1, 2), (3, 4), (4, 5), (5, 3)])
    seq = unicyclic_steps(G)
    rep = apply_sequence(G, seq)
    assert rep.complete and rep.width <= 2


def test_caterpillar_forest():
    G = Trigraph.from_edges(8, path(4).edges + [(4, 5), (5, 6), (5, 7)])
    assert is_caterpillar_forest(G)
    assert not is_caterpillar_forest(cycle(3))


def test_induced_star_subdivision():
    assert has_induced_star_subdivision(star_subdivision(3))
    assert not has_induced_star_subdivision(path(7))
    assert not has_induced_star_subdivision(star_subdivision(2))
    # chord between two arms kills the induced copy
    G = Trigraph.from_edges(7, star_subdivision(3).edges + [(4, 5)])
    assert not has_induced_star_subdivision(G)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 9), st.floats(0, 0.6), st.integers(0, 2**32))
def test_induced_star_subdivision_oracle(n, p, seed):
    G = random_plain(n, p, random.Random(seed))
    g = nx_graph(G)
    gm = nx.algorithms.isomorphism.GraphMatcher(g, CLAW_SUBDIVISION)
    assert has_induced_star_subdivision(G) == gm.subgraph_is_isomorphic()
