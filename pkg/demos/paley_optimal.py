"""
Optimal sequences for Paley graphs
==================================

Every pair of vertices in a Paley graph differs on exactly (q-1)/2
neighbours, so no contraction can do better than that.  Pairing each
element with its negative first reaches the bound.
"""

from twinwidth.bounds import lower_bound_min_symdiff, paley_sequence
from twinwidth.generators import paley

for q in (5, 9, 13, 17, 25, 29, 37, 41, 49):
    b = paley_sequence(q)
    lb = lower_bound_min_symdiff(paley(q))
    print(f"q={q:3d}  width={b.width:3d}  lower bound={lb:3d}  (q-1)/2={(q - 1) // 2}")

# the first steps are the orbit pairs {u, -u}
print(paley_sequence(13).sequence[:6])
