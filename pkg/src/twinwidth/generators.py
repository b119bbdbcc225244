"""Graph families: Paley graphs, G(n, p) samples and small structured graphs.

Random families draw from numpy's PCG64 bit generator, which produces the
same stream on every platform for a given seed.  Per-sample streams come
from :func:`derive_seed`.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from .fields import FiniteField
from .trigraph import Trigraph

DEFAULT_SEED = 20220705
_MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def derive_seed(master: int, *indices: int) -> int:
    """Fold sample indices into a master seed: ``s <- splitmix64(s ^ i)``."""
    s = master & _MASK64
    for i in indices:
        s = splitmix64(s ^ (i & _MASK64))
    return s


def rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed & _MASK64))


# -- Paley and conference graphs -------------------------------------------


def paley(q: int, modulus: Optional[Sequence[int]] = None) -> Trigraph:
    """Paley graph on GF(q); vertex ``i`` is the field element encoded as ``i``."""
    if q % 4 != 1:
        raise ValueError(f"Paley graph needs q = 1 (mod 4), got q = {q}")
    F = FiniteField(q, modulus)
    sq = F.squares()
    edges = [(a, b) for a in range(q) for b in range(a + 1, q) if F.sub(b, a) in sq]
    return Trigraph.from_edges(q, edges)


def is_conference_graph(G: Trigraph) -> bool:
    n = len(G)
    if n == 0 or n % 4 != 1 or not G.is_plain():
        return False
    k = (n - 1) // 2
    nbrs = {v: G.neighbor_set(v) for v in G}
    if any(len(s) != k for s in nbrs.values()):
        return False
    vs = G.vertices
    for i, u in enumerate(vs):
        for v in vs[i + 1:]:
            common = len(nbrs[u] & nbrs[v])
            want = (n - 5) // 4 if v in nbrs[u] else (n - 1) // 4
            if common != want:
                return False
    return True


# -- random graphs ---------------------------------------------------------


def gnp(n: int, p: float, seed: int = DEFAULT_SEED) -> Trigraph:
    """Erdos-Renyi sample on ``0..n-1``.

    One uniform draw per pair ``i < j`` in row-major order; the pair is an
    edge iff the draw is below ``p``.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    gen = rng(seed)
    edges = []
    for i in range(n - 1):
        hits = np.flatnonzero(gen.random(n - 1 - i) < p)
        edges.extend((i, i + 1 + int(j)) for j in hits)
    return Trigraph.from_edges(n, edges)


def random_tree(n: int, seed: int = DEFAULT_SEED) -> Trigraph:
    """Uniform labeled tree on ``0..n-1`` via a random Pruefer code."""
    if n < 1:
        raise ValueError("a tree needs at least one vertex")
    if n == 1:
        return Trigraph([0])
    if n == 2:
        return Trigraph.from_edges(2, [(0, 1)])
    code = [int(x) for x in rng(seed).integers(0, n, size=n - 2)]
    return Trigraph.from_edges(n, prufer_decode(code, n))


def prufer_decode(code: Sequence[int], n: int) -> List[tuple]:
    degree = [1] * n
    for x in code:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def random_caterpillar(n: int, seed: int = DEFAULT_SEED) -> Trigraph:
    """A caterpillar with ``n`` vertices and a random spine length, randomly relabeled."""
    if n < 1:
        raise ValueError("need n >= 1")
    g = rng(seed)
    spine = int(g.integers(1, n + 1))
    owners = [int(x) for x in g.integers(0, spine, size=n - spine)]
    counts = [owners.count(i) for i in range(spine)]
    T = caterpillar(counts)
    perm = [int(x) for x in g.permutation(n)]
    return relabel(T, dict(enumerate(perm)))


def random_unicyclic(n: int, seed: int = DEFAULT_SEED) -> Trigraph:
    """Connected graph with exactly one cycle: a random tree plus one extra edge."""
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    g = rng(seed)
    T = random_tree(n, int(g.integers(0, 2**63)))
    while True:
        u, v = (int(x) for x in g.integers(0, n, size=2))
        if u != v and not T.has_edge(u, v):
            return Trigraph(range(n), T.edges + [(u, v)])


# -- deterministic families -------------------------------------------------


def path(n: int) -> Trigraph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Trigraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Trigraph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Trigraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Trigraph:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Trigraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty(n: int) -> Trigraph:
    return Trigraph(range(n))


def star(t: int) -> Trigraph:
    """K_{1,t} with center 0."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    return Trigraph.from_edges(t + 1, [(0, i) for i in range(1, t + 1)])


def star_subdivision(t: int) -> Trigraph:
    """1-subdivision of K_{1,t}: center 0, middles ``1..t``, tips ``t+1..2t``."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    edges = [(0, i) for i in range(1, t + 1)] + [(i, t + i) for i in range(1, t + 1)]
    return Trigraph.from_edges(2 * t + 1, edges)


def caterpillar(leaf_counts: Sequence[int]) -> Trigraph:
    """Spine ``0..L-1`` followed by the leaves of spine vertex 0, then 1, ..."""
    L = len(leaf_counts)
    if L < 1 or any(c < 0 for c in leaf_counts):
        raise ValueError("caterpillar needs a nonempty spine and nonnegative leaf counts")
    edges = [(i, i + 1) for i in range(L - 1)]
    nxt = L
    for i, c in enumerate(leaf_counts):
        for _ in range(c):
            edges.append((i, nxt))
            nxt += 1
    return Trigraph.from_edges(nxt, edges)


def grid(rows: int, cols: int) -> Trigraph:
    """Vertex ``r * cols + c`` sits at row ``r``, column ``c``."""
    if rows < 1 or cols < 1:
        raise ValueError("grid needs positive dimensions")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Trigraph.from_edges(rows * cols, edges)


def complement(G: Trigraph) -> Trigraph:
    if not G.is_plain():
        raise ValueError("complement is only defined for graphs without red edges")
    vs = G.vertices
    edges = []
    for i, u in enumerate(vs):
        nu = G.colored_neighbors(u)
        edges.extend((u, v) for v in vs[i + 1:] if v not in nu)
    return Trigraph(vs, edges)


def relabel(G: Trigraph, mapping: Dict[int, int]) -> Trigraph:
    return Trigraph(
        (mapping[v] for v in G),
        ((mapping[u], mapping[v]) for u, v in G.black_edges),
        ((mapping[u], mapping[v]) for u, v in G.red_edges),
    )


# -- family dispatch ----------------------------------------------------------

_FAMILIES = {
    "paley": lambda a: paley(a["q"]),
    "gnp": lambda a: gnp(a["n"], a["p"], a.get("seed", DEFAULT_SEED)),
    "path": lambda a: path(a["n"]),
    "cycle": lambda a: cycle(a["n"]),
    "complete": lambda a: complete(a["n"]),
    "empty": lambda a: empty(a["n"]),
    "star": lambda a: star(a["t"]),
    "star_subdivision": lambda a: star_subdivision(a["t"]),
    "caterpillar": lambda a: caterpillar(a["leaves"]),
    "random_tree": lambda a: random_tree(a["n"], a.get("seed", DEFAULT_SEED)),
    "random_caterpillar": lambda a: random_caterpillar(a["n"], a.get("seed", DEFAULT_SEED)),
    "random_unicyclic": lambda a: random_unicyclic(a["n"], a.get("seed", DEFAULT_SEED)),
    "grid": lambda a: grid(a["rows"], a["cols"]),
}

FAMILY_TAGS = tuple(_FAMILIES)


@dataclass
class GraphFamilySpec:
    tag: str
    params: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.tag not in _FAMILIES:
            raise ValueError(f"unknown family {self.tag!r}; choose from {', '.join(FAMILY_TAGS)}")


def family(spec: GraphFamilySpec) -> Trigraph:
    try:
        return _FAMILIES[spec.tag](spec.params)
    except KeyError as exc:
        raise ValueError(f"family {spec.tag!r} is missing parameter {exc.args[0]!r}") from None
