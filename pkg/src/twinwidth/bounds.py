"""Upper- and lower-bound certificates for twin-width.

Every ``*_sequence`` function returns a :class:`BoundedSequence` whose
``width`` comes from an independent replay through
:func:`~twinwidth.trigraph.apply_sequence`, never from the construction's own
bookkeeping.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import structure
from .fields import FiniteField
from .generators import DEFAULT_SEED, derive_seed, paley, rng
from .trigraph import (
    ContractionSequence,
    ContractionStep,
    Trigraph,
    VerificationReport,
    apply_sequence,
    completion_steps,
)


@dataclass
class BoundedSequence:
    sequence: ContractionSequence
    width: int
    claimed_bound: float
    bound_met: bool
    method: str = ""
    report: Optional[VerificationReport] = field(default=None, repr=False, compare=False)
    info: Dict[str, float] = field(default_factory=dict)


def _bounded(G: Trigraph, seq: ContractionSequence, claimed: float, method: str,
             strict: bool = False, **info) -> BoundedSequence:
    rep = apply_sequence(G, seq)
    if not rep.complete:
        raise AssertionError(f"{method} sequence does not reach a single vertex")
    met = rep.width < claimed if strict else rep.width <= claimed
    return BoundedSequence(list(seq), rep.width, claimed, met, method, rep, dict(info))


# -- symmetric differences ---------------------------------------------------


def symdiff_matrix(G: Trigraph) -> Tuple[List[int], np.ndarray]:
    """All values ``|(N(u) ^ N(v)) - {u, v}|`` at once, indexed like ``G.vertices``."""
    if not G.is_plain():
        raise ValueError("expected a graph without red edges")
    vs = G.vertices
    idx = {v: i for i, v in enumerate(vs)}
    n = len(vs)
    A = np.zeros((n, n), dtype=np.float64)
    for u, v in G.edges:
        A[idx[u], idx[v]] = A[idx[v], idx[u]] = 1.0
    deg = A.sum(axis=1)
    common = A @ A
    S = deg[:, None] + deg[None, :] - 2.0 * common - 2.0 * A
    return vs, np.rint(S).astype(np.int64)


def lower_bound_min_symdiff(G: Trigraph) -> int:
    """Minimum symmetric-difference size over all vertex pairs; a lower bound on twin-width."""
    if len(G) < 2:
        raise ValueError("need at least two vertices")
    _, S = symdiff_matrix(G)
    iu = np.triu_indices(len(S), k=1)
    return int(S[iu].min())


# -- Paley graphs -----------------------------------------------------------


def paley_sequence(q: int, modulus: Optional[Sequence[int]] = None) -> BoundedSequence:
    """Contract each pair ``{u, -u}`` (representative: the smaller encoding), then finish."""
    G = paley(q, modulus)
    F = FiniteField(q, modulus)
    steps: ContractionSequence = []
    for u in range(1, q):
        w = F.neg(u)
        if u < w:
            steps.append(ContractionStep(u, w))
    dropped = {s.drop for s in steps}
    steps += completion_steps(v for v in range(q) if v not in dropped)
    return _bounded(G, steps, (q - 1) / 2, "paley")


# -- vertex-count bound --------------------------------------------------------


def theorem1_bound(n: int) -> float:
    """``(n + sqrt(n ln n) + sqrt(n) + 2 ln n) / 2``."""
    ln = math.log(n)
    return (n + math.sqrt(n * ln) + math.sqrt(n) + 2 * ln) / 2


@dataclass
class PairSet:
    pairs: List[Tuple[int, int]]
    threshold: float
    symdiffs: List[int] = field(default_factory=list)
    leftover: List[int] = field(default_factory=list)


def find_disjoint_pairs(G: Trigraph, threshold: Optional[float] = None) -> PairSet:
    """Greedy maximal set of disjoint pairs with symmetric difference at most the threshold.

    Pairs are taken in increasing order of symmetric difference, ties broken
    by smaller labels; the default threshold is ``(n + sqrt(n) - 1) / 2``.
    """
    n = len(G)
    if threshold is None:
        threshold = (n + math.sqrt(n) - 1) / 2
    vs, S = symdiff_matrix(G)
    iu, ju = np.triu_indices(n, k=1)
    vals = S[iu, ju]
    ok = vals <= threshold
    iu, ju, vals = iu[ok], ju[ok], vals[ok]
    order = np.lexsort((ju, iu, vals))
    used = np.zeros(n, dtype=bool)
    pairs, sd = [], []
    for t in order:
        i, j = iu[t], ju[t]
        if used[i] or used[j]:
            continue
        used[i] = used[j] = True
        pairs.append((vs[i], vs[j]))
        sd.append(int(vals[t]))
    leftover = [vs[i] for i in range(n) if not used[i]]
    return PairSet(pairs, threshold, sd, leftover)


def step_functions(G: Trigraph, pairs: Sequence[Tuple[int, int]]) -> Tuple[List[int], np.ndarray]:
    """Red degrees ``rdeg_{G/p_i}(v_i)`` and the matrix ``x[i, j]``.

    ``x[i, j]`` is the change in red degree of the vertex made from ``p_i``
    when ``p_j`` is contracted afterwards: ``-1`` if it had red edges to both
    ends of ``p_j``, ``+1`` if it had a black edge to one end and no edge to
    the other, ``0`` otherwise.
    """
    flat = [v for p in pairs for v in p]
    if len(set(flat)) != len(flat):
        raise ValueError("pairs overlap")
    nb = {v: G.neighbor_set(v) for v in flat}
    s = len(pairs)
    rdeg = []
    # color from merged p_i to a vertex x: 2 black, 1 red, 0 none
    colors = []
    for u, v in pairs:
        nu, nv = nb[u] - {v}, nb[v] - {u}
        rdeg.append(len(nu ^ nv))
        colors.append((nu & nv, nu ^ nv))
    x = np.zeros((s, s), dtype=np.int64)
    for i in range(s):
        black, red = colors[i]
        for j in range(s):
            if i == j:
                continue
            a, b = pairs[j]
            ca = 2 if a in black else (1 if a in red else 0)
            cb = 2 if b in black else (1 if b in red else 0)
            if ca == 1 and cb == 1:
                x[i, j] = -1
            elif {ca, cb} == {0, 2}:
                x[i, j] = 1
    return rdeg, x


def order_bound_check(G: Trigraph, pairs, order: Optional[Sequence[int]] = None) -> int:
    """Evaluate the explicit width bound for contracting ``pairs`` in ``order`` first.

    ``max({n - s - 1} | {rdeg(v_i) + sum_{k<=j} x_i(k) : i <= j <= s - 1})``
    with positions taken along ``order``.
    """
    plist = [tuple(p) for p in getattr(pairs, "pairs", pairs)]
    n, s = len(G), len(plist)
    if order is None:
        order = list(range(s))
    if sorted(order) != list(range(s)):
        raise ValueError("order must be a permutation of the pair indices")
    rdeg, x = step_functions(G, plist)
    best = n - s - 1
    for pos_i in range(s - 1):
        i = order[pos_i]
        running = rdeg[i] + sum(int(x[i, order[k]]) for k in range(pos_i + 1))
        best = max(best, running)
        for pos_j in range(pos_i + 1, s - 1):
            running += int(x[i, order[pos_j]])
            best = max(best, running)
    return best


def theorem1_sequence(G: Trigraph, seed: int = DEFAULT_SEED, max_attempts: int = 50) -> BoundedSequence:
    """Contract a maximal low-difference pair set in random order, then finish arbitrarily.

    Each sampled order is replayed; the first one whose width is below the
    vertex-count bound is returned.  If every attempt fails, the best one is
    returned with ``bound_met=False``.
    """
    n = len(G)
    if n <= 2:
        return _bounded(G, completion_steps(G.vertices), 0, "theorem1")
    bound = theorem1_bound(n)
    ps = find_disjoint_pairs(G)
    best: Optional[BoundedSequence] = None
    for attempt in range(max(1, max_attempts)):
        perm = rng(derive_seed(seed, attempt)).permutation(len(ps.pairs))
        steps = [ContractionStep(*ps.pairs[int(i)]) for i in perm]
        dropped = {s.drop for s in steps}
        steps += completion_steps(v for v in G.vertices if v not in dropped)
        out = _bounded(G, steps, bound, "theorem1", strict=True,
                       attempts=attempt + 1, pairs=len(ps.pairs))
        if best is None or out.width < best.width:
            best = out
        if out.bound_met:
            return out
    return best


# -- edge-count bound -------------------------------------------------------


def theorem2_bound(m: int) -> float:
    """``sqrt(3m) + m^(1/4) sqrt(ln m) / (4 * 3^(1/4)) + 3 m^(1/4) / 2``."""
    return math.sqrt(3 * m) + m ** 0.25 * math.sqrt(math.log(m)) / (4 * 3 ** 0.25) + 1.5 * m ** 0.25


def theorem2_constants(m: int) -> Dict[str, float]:
    q = math.sqrt(4 * m / 3)
    root = math.sqrt(q * math.log(q)) + math.sqrt(q)
    k = q - root / 6 - math.log(q) / 9
    alpha = 1.5 * (q + root / 6 + 5 * math.log(q) / 9)
    return {"q": q, "k": k, "alpha": alpha}


@dataclass
class WeightPartition:
    removed: List[int]
    blocks: List[List[int]]
    budget: float


def partition_by_weight(weights: Sequence[float], k: float) -> WeightPartition:
    """Split indices into at most ``ceil(k)`` blocks of weight <= total/k, plus fewer than ``k`` leftovers.

    Each round fills a block greedily by ascending weight until nothing else
    fits, sets aside the heaviest remaining index, and continues with ``k - 1``.
    """
    if k <= 0:
        raise ValueError("k must be positive")
    w = [float(a) for a in weights]
    if any(a < 0 for a in w):
        raise ValueError("weights must be nonnegative")
    budget = sum(w) / k
    rest = list(range(len(w)))
    removed: List[int] = []
    blocks: List[List[int]] = []
    while rest:
        if k <= 1:
            blocks.append(sorted(rest))
            break
        if k > len(rest):
            removed.extend(rest)
            break
        cap = sum(w[i] for i in rest) / k
        block, total = [], 0.0
        for i in sorted(rest, key=lambda i: (w[i], i)):
            if total + w[i] <= cap:
                block.append(i)
                total += w[i]
            else:
                break
        blocks.append(sorted(block))
        chosen = set(block)
        rest = [i for i in rest if i not in chosen]
        if not rest:
            break
        r = max(rest, key=lambda i: (w[i], i))
        removed.append(r)
        rest.remove(r)
        k -= 1
    return WeightPartition(sorted(removed), blocks, budget)


def theorem2_sequence(G: Trigraph, seed: int = DEFAULT_SEED) -> BoundedSequence:
    """Three phases: collapse low-degree-sum blocks, run the vertex-count
    construction on the leftover set, then finish arbitrarily."""
    if not G.is_plain():
        raise ValueError("expected a graph without red edges")
    m = G.num_edges()
    if m == 0:
        return _bounded(G, completion_steps(G.vertices), 0, "theorem2")
    claimed = theorem2_bound(m)
    if m <= 3:
        steps = structure.cograph_steps(G)
        if steps is None:
            steps = structure.caterpillar_forest_steps(G)
        return _bounded(G, steps, claimed, "theorem2", strict=True)
    c = theorem2_constants(m)
    vs = G.vertices
    part = partition_by_weight([G.degree(v) for v in vs], c["k"])
    removed = [vs[i] for i in part.removed]
    blocks = [[vs[i] for i in b] for b in part.blocks]
    if not removed:
        big = max(range(len(blocks)), key=lambda i: (len(blocks[i]), -i))
        removed.append(blocks[big].pop())
        blocks = [b for b in blocks if b]
    steps: ContractionSequence = []
    for b in blocks:
        steps.extend(ContractionStep(b[0], v) for v in b[1:])
    inner = theorem1_sequence(G.subgraph(removed), seed)
    steps.extend(inner.sequence)
    dropped = {s.drop for s in steps}
    steps += completion_steps(v for v in vs if v not in dropped)
    return _bounded(G, steps, claimed, "theorem2", strict=True,
                    alpha=c["alpha"], k=c["k"], q=c["q"], blocks=len(blocks), removed=len(removed))


# -- structural sequences -------------------------------------------------------


def cograph_sequence(G: Trigraph) -> BoundedSequence:
    steps = structure.cograph_steps(G)
    if steps is None:
        raise ValueError("graph is not a cograph")
    return _bounded(G, steps, 0, "cograph")


def caterpillar_sequence(T: Trigraph) -> BoundedSequence:
    return _bounded(T, structure.caterpillar_steps(T), 1, "caterpillar")


def tree_sequence(T: Trigraph, root: Optional[int] = None) -> BoundedSequence:
    if root is None:
        root = min(T.vertices)
    return _bounded(T, structure.tree_steps(T, root), 2, "tree")


def unicyclic_sequence(G: Trigraph) -> BoundedSequence:
    return _bounded(G, structure.unicyclic_steps(G), 2, "unicyclic")


def _component_steps(G: Trigraph, comp: List[int]) -> Tuple[ContractionSequence, int]:
    sub = G.subgraph(comp)
    steps = structure.cograph_steps(sub)
    if steps is not None:
        return steps, 0
    if structure.is_tree(sub) and structure.is_caterpillar(sub):
        return structure.caterpillar_steps(sub), 1
    return structure.unicyclic_component_steps(G, comp), 2


def best_upper_bound(G: Trigraph, seed: int = DEFAULT_SEED) -> BoundedSequence:
    """Cheapest certificate among the available constructions."""
    if not G.is_plain():
        raise ValueError("expected a graph without red edges")
    if len(G) <= 1:
        return _bounded(G, [], 0, "trivial")
    steps = structure.cograph_steps(G)
    if steps is not None:
        return _bounded(G, steps, 0, "cograph")
    if structure.max_cycles_per_component(G) <= 1:
        parts, claim = [], 0
        for comp in structure.components(G):
            sub_steps, c = _component_steps(G, comp)
            parts.append((comp, sub_steps))
            claim = max(claim, c)
        seq = structure.join_components(G, parts)
        method = "caterpillar" if claim == 1 else "unicyclic"
        return _bounded(G, seq, claim, method)
    options = [theorem1_sequence(G, seed)]
    if G.num_edges() >= 1:
        options.append(theorem2_sequence(G, seed))
    return min(options, key=lambda b: b.width)
