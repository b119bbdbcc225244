"""
Exact twin-width of small graphs
================================

Branch and bound over contraction sequences, checked against the
complement and against the easy lower bound.
"""

from collections import Counter

import networkx as nx

from twinwidth.exact import exact_solve
from twinwidth.generators import complement, cycle, grid, star_subdivision
from twinwidth.trigraph import Trigraph, apply_sequence

for name, G in [("C5", cycle(5)), ("S(K_1,3)", star_subdivision(3)), ("3x3 grid", grid(3, 3))]:
    r = exact_solve(G)
    print(f"{name:10s} tww={r.value}  certificate replays to {apply_sequence(G, r.certificate).width}")

# distribution over all graphs on 7 vertices
hist = Counter()
for g in nx.graph_atlas_g():
    if g.number_of_nodes() == 7:
        G = Trigraph.from_edges(7, list(g.edges()))
        v = exact_solve(G).value
        assert v == exact_solve(complement(G)).value
        hist[v] += 1
print("7-vertex graphs by twin-width:", dict(sorted(hist.items())))
