"""Trigraphs, contractions and certificate replay.

A trigraph is a simple graph whose edges are either black or red.  Each
vertex keeps a dict ``neighbor -> is_red``, so contracting two vertices costs
``O(deg u + deg v)``.  The merged vertex always keeps the label of the first
argument (``keep``).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

Edge = Tuple[int, int]


class ContractionStep(NamedTuple):
    keep: int
    drop: int


ContractionSequence = List[ContractionStep]


class SequenceError(ValueError):
    """A certificate step refers to a vertex that is not alive."""

    def __init__(self, step: int, message: str):
        super().__init__(f"step {step}: {message}")
        self.step = step


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Trigraph:
    """Mutable trigraph on integer vertex ids."""

    __slots__ = ("_adj", "_rdeg", "_hist", "_max_rdeg")

    def __init__(
        self,
        vertices: Iterable[int] = (),
        black_edges: Iterable[Edge] = (),
        red_edges: Iterable[Edge] = (),
    ):
        self._adj: Dict[int, Dict[int, bool]] = {}
        for v in vertices:
            self._add_vertex(v)
        for u, v in black_edges:
            self._add_edge(u, v, False)
        for u, v in red_edges:
            self._add_edge(u, v, True)
        self._rebuild_red_index()

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Trigraph":
        """Plain graph on ``0..n-1``."""
        return cls(range(n), edges)

    def _add_vertex(self, v: int) -> None:
        v = int(v)
        if v < 0:
            raise ValueError(f"vertex ids must be nonnegative, got {v}")
        self._adj.setdefault(v, {})

    def _add_edge(self, u: int, v: int, red: bool) -> None:
        u, v = int(u), int(v)
        if u == v:
            raise ValueError(f"self-loop at {u}")
        for x in (u, v):
            if x not in self._adj:
                raise ValueError(f"edge endpoint {x} is not a vertex")
        if v in self._adj[u]:
            if self._adj[u][v] != red:
                raise ValueError(f"edge {u}-{v} is both black and red")
            return
        self._adj[u][v] = red
        self._adj[v][u] = red

    def _rebuild_red_index(self) -> None:
        self._rdeg = {v: sum(nb.values()) for v, nb in self._adj.items()}
        self._hist = Counter(self._rdeg.values())
        self._max_rdeg = max(self._rdeg.values(), default=0)

    def _bump(self, v: int, delta: int) -> None:
        old = self._rdeg[v]
        new = old + delta
        self._rdeg[v] = new
        self._hist[old] -= 1
        self._hist[new] += 1
        if new > self._max_rdeg:
            self._max_rdeg = new

    # -- queries -----------------------------------------------------------

    def __len__(self) -> int:
        return len(self._adj)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(self._adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Trigraph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self) -> str:
        return (
            f"Trigraph(n={len(self)}, black={self.num_black_edges()}, "
            f"red={self.num_red_edges()})"
        )

    @property
    def vertices(self) -> List[int]:
        return sorted(self._adj)

    @property
    def black_edges(self) -> List[Edge]:
        return sorted(
            (u, v) for u, nb in self._adj.items() for v, r in nb.items() if u < v and not r
        )

    @property
    def red_edges(self) -> List[Edge]:
        return sorted(
            (u, v) for u, nb in self._adj.items() for v, r in nb.items() if u < v and r
        )

    @property
    def edges(self) -> List[Edge]:
        return sorted((u, v) for u, nb in self._adj.items() for v in nb if u < v)

    def num_edges(self) -> int:
        return sum(len(nb) for nb in self._adj.values()) // 2

    def num_red_edges(self) -> int:
        return sum(self._rdeg.values()) // 2

    def num_black_edges(self) -> int:
        return self.num_edges() - self.num_red_edges()

    def is_plain(self) -> bool:
        return self._max_rdeg == 0

    def _check(self, v: int) -> None:
        if v not in self._adj:
            raise KeyError(f"unknown vertex {v}")

    def neighbors(self, v: int) -> List[int]:
        self._check(v)
        return list(self._adj[v])

    def neighbor_set(self, v: int) -> set:
        self._check(v)
        return set(self._adj[v])

    def colored_neighbors(self, v: int) -> Dict[int, bool]:
        """Read-only view ``neighbor -> is_red``; do not mutate."""
        self._check(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._adj[v])

    def red_degree(self, v: int) -> int:
        self._check(v)
        return self._rdeg[v]

    def max_red_degree(self) -> int:
        while self._max_rdeg > 0 and self._hist[self._max_rdeg] == 0:
            self._max_rdeg -= 1
        return self._max_rdeg

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        return v in self._adj[u]

    def is_red(self, u: int, v: int) -> bool:
        self._check(u)
        return self._adj[u].get(v, False)

    # -- mutation ----------------------------------------------------------

    def copy(self) -> "Trigraph":
        g = Trigraph.__new__(Trigraph)
        g._adj = {v: dict(nb) for v, nb in self._adj.items()}
        g._rdeg = dict(self._rdeg)
        g._hist = Counter(self._hist)
        g._max_rdeg = self._max_rdeg
        return g

    def merge(self, keep: int, drop: int) -> None:
        """Contract ``keep`` and ``drop`` in place; the result is named ``keep``."""
        if keep == drop:
            raise ValueError(f"cannot contract vertex {keep} with itself")
        self._check(keep)
        self._check(drop)
        adj = self._adj
        nk = adj[keep]
        nd = adj.pop(drop)
        # unlink keep-drop
        if drop in nk:
            red = nk.pop(drop)
            del nd[keep]
            if red:
                self._bump(keep, -1)
                self._bump(drop, -1)
        for x, red_d in nd.items():
            nx_ = adj[x]
            del nx_[drop]
            if red_d:
                self._bump(x, -1)
            red_k = nk.get(x)
            if red_k is None:
                # x only sees drop: red
                nk[x] = True
                nx_[keep] = True
                self._bump(keep, 1)
                self._bump(x, 1)
            elif not red_k and red_d:
                nk[x] = True
                nx_[keep] = True
                self._bump(keep, 1)
                self._bump(x, 1)
        for x, red_k in list(nk.items()):
            if x not in nd and not red_k:
                # x only sees keep: black edge turns red
                nk[x] = True
                adj[x][keep] = True
                self._bump(keep, 1)
                self._bump(x, 1)
        rd = self._rdeg.pop(drop)
        self._hist[rd] -= 1

    def remove_vertex(self, v: int) -> None:
        self._check(v)
        for x, red in self._adj.pop(v).items():
            del self._adj[x][v]
            if red:
                self._bump(x, -1)
        rd = self._rdeg.pop(v)
        self._hist[rd] -= 1

    def subgraph(self, vertices: Iterable[int]) -> "Trigraph":
        keep = set(vertices)
        for v in keep:
            self._check(v)
        g = Trigraph.__new__(Trigraph)
        g._adj = {v: {x: r for x, r in self._adj[v].items() if x in keep} for v in keep}
        g._rebuild_red_index()
        return g


def contract(G: Trigraph, u: int, v: int) -> Trigraph:
    """Return ``G/{u,v}`` as a new trigraph; the merged vertex is named ``u``."""
    H = G.copy()
    H.merge(u, v)
    return H


def red_degree(G: Trigraph, v: int) -> int:
    return G.red_degree(v)


def max_red_degree(G: Trigraph) -> int:
    return G.max_red_degree()


def boundary_size(G: Trigraph, A: Iterable[int]) -> int:
    """Number of edges (of either color) with exactly one end in ``A``."""
    A = set(A)
    total = 0
    for v in A:
        for x in G.colored_neighbors(v):
            if x not in A:
                total += 1
    return total


def symmetric_difference_size(G: Trigraph, u: int, v: int) -> int:
    """``|(N(u) ^ N(v)) - {u, v}|`` in a plain graph.

    This is the red degree of the merged vertex after contracting ``u`` and ``v``.
    """
    if u == v:
        raise ValueError("u and v must be distinct")
    if not G.is_plain():
        raise ValueError("symmetric_difference_size needs a graph without red edges")
    nu = G.neighbor_set(u)
    nv = G.neighbor_set(v)
    d = nu ^ nv
    d.discard(u)
    d.discard(v)
    return len(d)


@dataclass
class VerificationReport:
    """Outcome of replaying a contraction sequence."""

    step_max_red_degrees: List[int]
    width: int
    sigma: Dict[int, int]
    preimage_sizes: Dict[int, int]
    initial_max_red_degree: int = 0
    result: Optional[Trigraph] = field(default=None, repr=False, compare=False)

    def preimage(self, w: int) -> List[int]:
        return sorted(v for v, img in self.sigma.items() if img == w)

    @property
    def complete(self) -> bool:
        """True if the replay ended with at most one vertex."""
        return self.result is not None and len(self.result) <= 1


def apply_sequence(G: Trigraph, seq: Iterable[Sequence[int]]) -> VerificationReport:
    """Replay ``seq`` on a copy of ``G`` and record the red degrees seen.

    Raises :class:`SequenceError` naming the first step that refers to a
    dead or unknown vertex.
    """
    H = G.copy()
    start = H.max_red_degree()
    # union-find style: each original vertex points at its current image
    owner: Dict[int, List[int]] = {v: [v] for v in H}
    maxima: List[int] = []
    for i, step in enumerate(seq):
        keep, drop = int(step[0]), int(step[1])
        if keep == drop:
            raise SequenceError(i, f"contracts vertex {keep} with itself")
        for x in (keep, drop):
            if x not in H:
                raise SequenceError(i, f"vertex {x} is not alive")
        H.merge(keep, drop)
        a, b = owner[keep], owner.pop(drop)
        if len(a) < len(b):
            a, b = b, a
        a.extend(b)
        owner[keep] = a
        maxima.append(H.max_red_degree())
    sigma = {v: w for w, members in owner.items() for v in members}
    sizes = {w: len(members) for w, members in owner.items()}
    width = max([start, *maxima])
    return VerificationReport(maxima, width, sigma, sizes, start, H)


def completion_steps(vertices: Iterable[int]) -> ContractionSequence:
    """Contract the two lowest labels repeatedly until one vertex is left."""
    vs = sorted(vertices)
    if not vs:
        return []
    low = vs[0]
    return [ContractionStep(low, x) for x in vs[1:]]
