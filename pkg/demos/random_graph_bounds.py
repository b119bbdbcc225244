"""
Upper bounds on random graphs
=============================

Compare the two generic constructions against their closed-form bounds
and the lower bound from symmetric differences.
"""

from twinwidth.bounds import (
    lower_bound_min_symdiff,
    theorem1_bound,
    theorem1_sequence,
    theorem2_bound,
    theorem2_sequence,
)
from twinwidth.generators import gnp

print(" n     p     m  lower  vtx-bound (formula)  edge-bound (formula)")
for n, p in [(50, 0.5), (100, 0.5), (200, 0.5), (100, 0.05), (200, 0.02)]:
    G = gnp(n, p, seed=1)
    m = G.num_edges()
    t1 = theorem1_sequence(G, seed=1)
    t2 = theorem2_sequence(G, seed=1)
    print(f"{n:3d} {p:5.2f} {m:5d} {lower_bound_min_symdiff(G):6d}"
          f" {t1.width:6d} ({theorem1_bound(n):6.1f})"
          f" {t2.width:10d} ({theorem2_bound(m):6.1f})")

# dense graphs favour the vertex-count construction, sparse ones the edge-count one
