"""Exact twin-width by depth-first search over contraction sequences.

States are trigraphs stored as per-vertex bitmasks of black and red
neighbours.  For a fixed width cap ``d`` the search only enters states whose
maximum red degree is at most ``d``; states that failed are remembered under
an isomorphism-invariant key (colour refinement plus individualisation), so
relabelled copies are never searched twice.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from . import structure
from .bounds import best_upper_bound, lower_bound_min_symdiff
from .trigraph import ContractionSequence, ContractionStep, Trigraph, apply_sequence

DEFAULT_BUDGET = 10**7
CANON_MAX_VERTICES = 12
_CANON_LEAF_LIMIT = 2000


@dataclass(frozen=True)
class Unknown:
    """Search budget ran out; the answer lies in ``[best_lower, best_upper]``."""

    best_upper: int
    best_lower: int

    def __bool__(self) -> bool:
        raise TypeError("Unknown has no truth value; check isinstance(result, Unknown)")


@dataclass
class Decision:
    feasible: Optional[bool]  # None when the budget ran out
    certificate: Optional[ContractionSequence] = None
    nodes: int = 0


@dataclass
class ExactResult:
    value: Optional[int]
    lower: int
    upper: int
    certificate: Optional[ContractionSequence]
    nodes: int


class _BudgetExhausted(Exception):
    pass


# -- bitmask trigraphs ---------------------------------------------------------

Masks = Tuple[Tuple[int, ...], Tuple[int, ...], int]  # black, red, alive


def _to_masks(G: Trigraph) -> Tuple[List[int], Masks]:
    labels = G.vertices
    idx = {v: i for i, v in enumerate(labels)}
    n = len(labels)
    black = [0] * n
    red = [0] * n
    for v in labels:
        i = idx[v]
        for x, is_red in G.colored_neighbors(v).items():
            if is_red:
                red[i] |= 1 << idx[x]
            else:
                black[i] |= 1 << idx[x]
    return labels, (tuple(black), tuple(red), (1 << n) - 1)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _contract(state: Masks, u: int, v: int) -> Tuple[Masks, int]:
    """Contract ``v`` into ``u``; return the new state and its max red degree."""
    black, red, alive = state
    bu_, bv_ = 1 << u, 1 << v
    strip = ~(bu_ | bv_)
    bu, bv = black[u] & strip, black[v] & strip
    ru, rv = red[u] & strip, red[v] & strip
    nb = bu & bv
    nr = (bu | bv | ru | rv) & ~nb
    B = list(black)
    R = list(red)
    B[u], R[u] = nb, nr
    B[v] = R[v] = 0
    alive &= ~bv_
    worst = nr.bit_count()
    for x in _bits(alive & ~bu_):
        bx = B[x] & strip
        rx = R[x] & strip
        if nb >> x & 1:
            bx |= bu_
        elif nr >> x & 1:
            rx |= bu_
        B[x], R[x] = bx, rx
        c = rx.bit_count()
        if c > worst:
            worst = c
    return (tuple(B), tuple(R), alive), worst


def _find_twin(state: Masks) -> Optional[Tuple[int, int]]:
    black, red, alive = state
    verts = list(_bits(alive))
    for a, u in enumerate(verts):
        for v in verts[a + 1:]:
            strip = ~((1 << u) | (1 << v))
            if black[u] & strip == black[v] & strip and red[u] & strip == red[v] & strip:
                return u, v
    return None


def _refine(verts: List[int], black, red, colors: Dict[int, int]) -> Dict[int, int]:
    ncls = len(set(colors.values()))
    while True:
        sig = {}
        for v in verts:
            sig[v] = (
                colors[v],
                tuple(sorted(colors[x] for x in _bits(black[v]))),
                tuple(sorted(colors[x] for x in _bits(red[v]))),
            )
        ranks = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        colors = {v: ranks[sig[v]] for v in verts}
        if len(ranks) == ncls:
            return colors
        ncls = len(ranks)


def canonical_key(state: Masks) -> tuple:
    """Key shared by exactly the states isomorphic to ``state`` (up to a fallback).

    Graphs above :data:`CANON_MAX_VERTICES` vertices, or whose
    individualisation tree is too large, get their labelled encoding instead;
    that is still sound for memoisation, only less effective.
    """
    black, red, alive = state
    verts = list(_bits(alive))
    if len(verts) > CANON_MAX_VERTICES:
        return ("L", state)
    start = {v: (black[v].bit_count(), red[v].bit_count()) for v in verts}
    ranks = {s: i for i, s in enumerate(sorted(set(start.values())))}
    colors = _refine(verts, black, red, {v: ranks[start[v]] for v in verts})
    best: List[Optional[tuple]] = [None]
    leaves = [0]

    def encode(colors: Dict[int, int]) -> tuple:
        order = sorted(verts, key=colors.__getitem__)
        pos = {v: i for i, v in enumerate(order)}
        out = []
        for v in order:
            bm = sum(1 << pos[x] for x in _bits(black[v]))
            rm = sum(1 << pos[x] for x in _bits(red[v]))
            out.append((bm, rm))
        return tuple(out)

    def search(colors: Dict[int, int]) -> None:
        cells: Dict[int, List[int]] = {}
        for v in verts:
            cells.setdefault(colors[v], []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1 and (target is None or len(cells[c]) < len(cells[target])):
                target = c
        if target is None:
            leaves[0] += 1
            if leaves[0] > _CANON_LEAF_LIMIT:
                raise _BudgetExhausted
            enc = encode(colors)
            if best[0] is None or enc < best[0]:
                best[0] = enc
            return
        for v in cells[target]:
            split = {x: 2 * c + (0 if x == v else 1) for x, c in colors.items()}
            search(_refine(verts, black, red, split))

    try:
        search(colors)
    except _BudgetExhausted:
        return ("L", state)
    return ("C", len(verts), best[0])


# -- search ---------------------------------------------------------------------


class _Search:
    def __init__(self, budget: int):
        self.budget = budget
        self.nodes = 0

    def decide(self, state: Masks, d: int) -> Optional[List[Tuple[int, int]]]:
        self.failed: set = set()
        return self._dfs(state, d)

    def _dfs(self, state: Masks, d: int) -> Optional[List[Tuple[int, int]]]:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExhausted
        prefix: List[Tuple[int, int]] = []
        # twins: contracting them equals deleting one, which never hurts
        while True:
            tw = _find_twin(state)
            if tw is None:
                break
            state, _ = _contract(state, *tw)
            prefix.append(tw)
        verts = list(_bits(state[2]))
        if len(verts) <= d + 1:
            return prefix + [(verts[0], x) for x in verts[1:]]
        key = canonical_key(state)
        if key in self.failed:
            return None
        options = []
        for a, u in enumerate(verts):
            for v in verts[a + 1:]:
                child, worst = _contract(state, u, v)
                if worst <= d:
                    options.append((worst, child[1][u].bit_count(), u, v, child))
        options.sort(key=lambda o: o[:4])
        seen = set()
        for worst, _, u, v, child in options:
            ck = canonical_key(child)
            if ck in seen or ck in self.failed:
                continue
            seen.add(ck)
            rest = self._dfs(child, d)
            if rest is not None:
                return prefix + [(u, v)] + rest
        self.failed.add(key)
        return None


def _check_plain(G: Trigraph) -> None:
    if not G.is_plain():
        raise ValueError("exact search takes graphs without red edges")


def decide_at_most(G: Trigraph, d: int, node_budget: int = DEFAULT_BUDGET) -> Decision:
    """Is there a contraction sequence of width at most ``d``?"""
    if d < 0:
        raise ValueError("d must be nonnegative")
    _check_plain(G)
    if len(G) <= 1:
        return Decision(True, [], 0)
    labels, state = _to_masks(G)
    s = _Search(node_budget)
    try:
        found = s.decide(state, d)
    except _BudgetExhausted:
        return Decision(None, None, s.nodes)
    if found is None:
        return Decision(False, None, s.nodes)
    cert = [ContractionStep(labels[u], labels[v]) for u, v in found]
    return Decision(True, cert, s.nodes)


def _solve_connected(G: Trigraph, budget: int) -> ExactResult:
    n = len(G)
    if n <= 2:
        return ExactResult(0, 0, 0, [ContractionStep(*G.vertices)] if n == 2 else [], 0)
    ub = best_upper_bound(G)
    lower = lower_bound_min_symdiff(G)
    if lower >= ub.width:
        return ExactResult(ub.width, ub.width, ub.width, ub.sequence, 0)
    labels, state = _to_masks(G)
    s = _Search(budget)
    for d in range(lower, ub.width):
        try:
            found = s.decide(state, d)
        except _BudgetExhausted:
            return ExactResult(None, d, ub.width, ub.sequence, s.nodes)
        if found is not None:
            cert = [ContractionStep(labels[u], labels[v]) for u, v in found]
            return ExactResult(d, d, d, cert, s.nodes)
    return ExactResult(ub.width, ub.width, ub.width, ub.sequence, s.nodes)


def exact_solve(G: Trigraph, node_budget: int = DEFAULT_BUDGET) -> ExactResult:
    """Exact twin-width with a certificate; components are solved separately."""
    _check_plain(G)
    if len(G) <= 1:
        return ExactResult(0, 0, 0, [], 0)
    parts = []
    value: Optional[int] = 0
    lower = upper = nodes = 0
    for comp in structure.components(G):
        r = _solve_connected(G.subgraph(comp), max(1, node_budget - nodes))
        nodes += r.nodes
        parts.append((comp, r.certificate))
        lower, upper = max(lower, r.lower), max(upper, r.upper)
        if r.value is None:
            value = None
    cert = structure.join_components(G, parts)
    if value is not None:
        value = upper
        rep = apply_sequence(G, cert)
        if rep.width != value:
            raise AssertionError(f"certificate width {rep.width} != solved value {value}")
    return ExactResult(value, lower, upper, cert, nodes)


def exact_twinwidth(G: Trigraph, node_budget: int = DEFAULT_BUDGET) -> Union[int, Unknown]:
    r = exact_solve(G, node_budget)
    if r.value is None:
        return Unknown(r.upper, r.lower)
    return r.value
