"""Low-width contraction sequences for structured graphs.

Every builder returns a plain list of :class:`ContractionStep`; the
``*_sequence`` wrappers in :mod:`twinwidth.bounds` replay them and attach the
verified width.
"""
from __future__ import annotations

from collections import defaultdict, deque
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Tuple

from .trigraph import ContractionSequence, ContractionStep, Trigraph


def components(G: Trigraph) -> List[List[int]]:
    seen = set()
    out = []
    for s in G.vertices:
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for x in G.colored_neighbors(v):
                if x not in seen:
                    seen.add(x)
                    comp.append(x)
                    queue.append(x)
        out.append(sorted(comp))
    return out


def is_forest(G: Trigraph) -> bool:
    return G.num_edges() == len(G) - len(components(G))


def is_tree(G: Trigraph) -> bool:
    return len(G) >= 1 and G.num_edges() == len(G) - 1 and len(components(G)) == 1


def max_cycles_per_component(G: Trigraph) -> int:
    """Largest cyclomatic number ``m - n + 1`` over the components."""
    best = 0
    for comp in components(G):
        m = sum(G.degree(v) for v in comp) // 2
        best = max(best, m - len(comp) + 1)
    return best


def join_components(G: Trigraph, per_component: Iterable[Tuple[List[int], ContractionSequence]]) -> ContractionSequence:
    """Concatenate per-component sequences, then merge the survivors.

    Each component sequence must shrink its component to one vertex; the
    survivors are mutually nonadjacent, so merging them creates no red edge.
    """
    seq: ContractionSequence = []
    survivors = []
    for comp, sub in per_component:
        seq.extend(sub)
        dropped = {s.drop for s in sub}
        left = [v for v in comp if v not in dropped]
        if len(left) != 1:
            raise AssertionError("component sequence did not reach a single vertex")
        survivors.append(left[0])
    survivors.sort()
    seq.extend(ContractionStep(survivors[0], x) for x in survivors[1:])
    return seq


# -- cographs ----------------------------------------------------------------


def twin_reduction(G: Trigraph) -> Tuple[ContractionSequence, Trigraph]:
    """Contract twins (open or closed, same colors) until none are left.

    Contracting a twin pair is the same as deleting one of them, so every
    step is free of new red edges.  Returns the steps and the reduced trigraph.
    """
    H = G.copy()
    steps: ContractionSequence = []
    dirty = set(H.vertices)
    while dirty:
        buckets: Dict[tuple, List[int]] = defaultdict(list)
        # Only vertices whose neighborhood changed (or their neighbors) can
        # have gained a twin, but twins are found by comparing against all
        # vertices, so hash every live vertex and look at buckets touching dirty.
        for v in H:
            nb = H.colored_neighbors(v)
            open_key = (0, frozenset(nb.items()))
            closed = dict(nb)
            closed[v] = False
            closed_key = (1, frozenset(closed.items()))
            buckets[open_key].append(v)
            buckets[closed_key].append(v)
        touched = set()
        for members in buckets.values():
            if len(members) < 2 or not any(v in dirty for v in members):
                continue
            members = [v for v in members if v in H and v not in touched]
            if len(members) < 2:
                continue
            keep = min(members)
            for drop in sorted(members):
                if drop == keep:
                    continue
                touched.update(H.colored_neighbors(drop))
                H.merge(keep, drop)
                steps.append(ContractionStep(keep, drop))
            touched.add(keep)
        dirty = {v for v in touched if v in H}
    return steps, H


def cograph_steps(G: Trigraph) -> Optional[ContractionSequence]:
    """A width-0 sequence if ``G`` is a cograph, else ``None``."""
    steps, H = twin_reduction(G)
    if len(H) <= 1:
        return steps
    return None


def is_cograph(G: Trigraph) -> bool:
    return cograph_steps(G) is not None


def has_induced_p4(G: Trigraph) -> bool:
    """Brute-force check for an induced path on four vertices."""
    nb = {v: G.neighbor_set(v) for v in G}
    for b, c in G.edges:
        for a in nb[b] - nb[c] - {c}:
            for d in nb[c] - nb[b] - {b}:
                if a != d and d not in nb[a]:
                    return True
    return False


# -- trees and caterpillars --------------------------------------------------


def _require_tree(T: Trigraph) -> None:
    if not is_tree(T):
        raise ValueError("input is not a tree")


def caterpillar_spine(T: Trigraph) -> Optional[List[int]]:
    """Ordered spine (tree minus its leaves) if ``T`` is a caterpillar, else ``None``."""
    _require_tree(T)
    if len(T) <= 2:
        return [min(T.vertices)]
    inner = [v for v in T if T.degree(v) > 1]
    inner_set = set(inner)
    inner_deg = {v: sum(1 for x in T.colored_neighbors(v) if x in inner_set) for v in inner}
    if any(d > 2 for d in inner_deg.values()):
        return None
    ends = sorted(v for v, d in inner_deg.items() if d <= 1)
    start = ends[0]
    order = [start]
    prev = None
    cur = start
    while True:
        nxt = [x for x in T.colored_neighbors(cur) if x in inner_set and x != prev]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
        order.append(cur)
    return order


def is_caterpillar(T: Trigraph) -> bool:
    return caterpillar_spine(T) is not None


def caterpillar_steps(T: Trigraph) -> ContractionSequence:
    """Width-1 sequence for a caterpillar.

    Leaves of the same spine vertex are twins and get merged first.  Then the
    vertices are absorbed in the order leaf(s_1), s_1, leaf(s_2), s_2, ...;
    each step contracts the growing blob into the next vertex, which keeps
    the label of that next vertex.
    """
    spine = caterpillar_spine(T)
    if spine is None:
        raise ValueError("tree is not a caterpillar")
    if len(T) == 1:
        return []
    spine_set = set(spine)
    steps: ContractionSequence = []
    order: List[int] = []
    for s in spine:
        leaves = sorted(x for x in T.colored_neighbors(s) if x not in spine_set)
        if leaves:
            for extra in leaves[1:]:
                steps.append(ContractionStep(leaves[0], extra))
            order.append(leaves[0])
        order.append(s)
    cur = order[0]
    for x in order[1:]:
        steps.append(ContractionStep(x, cur))
        cur = x
    return steps


def _rooted(T: Trigraph, root: int) -> Tuple[Dict[int, Optional[int]], Dict[int, int]]:
    parent: Dict[int, Optional[int]] = {root: None}
    depth = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for x in T.colored_neighbors(v):
            if x not in parent:
                parent[x] = v
                depth[x] = depth[v] + 1
                queue.append(x)
    return parent, depth


def tree_steps(T: Trigraph, root: int, final: bool = True, within: Optional[Trigraph] = None) -> ContractionSequence:
    """Width-2 sequence for a tree in which ``root`` is contracted last.

    Works level by level from the deepest one.  At each parent ``p`` on the
    current level all children are leaves; they are merged into one leaf,
    which is then folded into ``p`` (``p`` becomes a leaf of its own parent,
    joined by a red edge).  A freshly folded leaf is immediately merged with
    a red sibling leaf if one exists, so no vertex carries more than two red
    edges at any time.

    With ``final=False`` the last contraction (root with its single
    remaining child) is omitted.  ``within`` is an enclosing trigraph in
    which ``T`` is an induced subtree attached only through ``root``; the
    simulation then tracks edge colors there.
    """
    if root not in T:
        raise KeyError(f"unknown root {root}")
    _require_tree(T)
    H = (within if within is not None else T).copy()
    parent, depth = _rooted(T, root)
    children: Dict[int, set] = defaultdict(set)
    for v, p in parent.items():
        if p is not None:
            children[p].add(v)
    steps: ContractionSequence = []

    def do(keep: int, drop: int) -> None:
        H.merge(keep, drop)
        steps.append(ContractionStep(keep, drop))
        children[parent[drop]].discard(drop)

    def merge_red_sibling(v: int) -> None:
        p = parent[v]
        for c in sorted(children[p]):
            if c != v and not children.get(c) and H.is_red(p, c):
                do(min(c, v), max(c, v))
                return

    levels: Dict[int, List[int]] = defaultdict(list)
    for v, d in depth.items():
        levels[d].append(v)
    for d in range(max(depth.values()), 0, -1):
        parents = sorted({parent[v] for v in levels[d]})
        for p in parents:
            kids = sorted(children[p], key=lambda c: (not H.is_red(p, c), c))
            if not kids:
                continue
            # every child is a leaf now; merge them, red one first as keeper
            keeper = kids[0]
            for c in kids[1:]:
                do(keeper, c)
            if p == root:
                continue
            do(p, keeper)
            children[p] = set()
            merge_red_sibling(p)
    if final:
        rest = sorted(children[root])
        if rest:
            do(root, rest[0])
    return steps


def find_cycle(G: Trigraph, comp: List[int]) -> List[int]:
    """Vertices of the unique cycle of a unicyclic component, in cyclic order."""
    deg = {v: G.degree(v) for v in comp}
    alive = set(comp)
    queue = deque(v for v in comp if deg[v] <= 1)
    while queue:
        v = queue.popleft()
        if v not in alive:
            continue
        alive.discard(v)
        for x in G.colored_neighbors(v):
            if x in alive:
                deg[x] -= 1
                if deg[x] == 1:
                    queue.append(x)
    start = min(alive)
    order = [start]
    prev, cur = None, start
    while True:
        nxt = min(x for x in G.colored_neighbors(cur) if x in alive and x != prev)
        if nxt == start:
            return order
        order.append(nxt)
        prev, cur = cur, nxt


def unicyclic_component_steps(G: Trigraph, comp: List[int]) -> ContractionSequence:
    """Width-2 sequence collapsing one component with at most one cycle."""
    sub = G.subgraph(comp)
    if len(comp) == 1:
        return []
    m = sub.num_edges()
    if m == len(comp) - 1:
        return tree_steps(sub, min(comp))
    if m != len(comp):
        raise ValueError("component has more than one cycle")
    cyc = find_cycle(sub, comp)
    on_cycle = set(cyc)
    H = sub.copy()
    steps: ContractionSequence = []
    pendant: Dict[int, Optional[int]] = {}
    for v in cyc:
        # hanging tree at v: v plus everything reachable avoiding the cycle
        seen = {v}
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for y in sub.colored_neighbors(x):
                if y not in seen and y not in on_cycle:
                    seen.add(y)
                    queue.append(y)
        tree = sub.subgraph(seen)
        part = tree_steps(tree, v, final=False, within=H)
        for s in part:
            H.merge(s.keep, s.drop)
        steps.extend(part)
        rest = [x for x in seen if x in H and x != v]
        pendant[v] = rest[0] if rest else None
    # absorb w_1 into v_1, then w_i into v_{i-1}
    for i, v in enumerate(cyc):
        w = pendant[v]
        if w is None:
            continue
        target = cyc[0] if i == 0 else cyc[i - 1]
        H.merge(target, w)
        steps.append(ContractionStep(target, w))
    # the rest is a cycle; contract neighbours along it
    cur = cyc[0]
    for v in cyc[1:]:
        H.merge(cur, v)
        steps.append(ContractionStep(cur, v))
    return steps


def unicyclic_steps(G: Trigraph) -> ContractionSequence:
    if not G.is_plain():
        raise ValueError("expected a graph without red edges")
    if max_cycles_per_component(G) > 1:
        raise ValueError("some component has more than one cycle")
    comps = components(G)
    return join_components(G, ((c, unicyclic_component_steps(G, c)) for c in comps))


def caterpillar_forest_steps(G: Trigraph) -> ContractionSequence:
    comps = components(G)
    return join_components(G, ((c, caterpillar_steps(G.subgraph(c))) for c in comps))


def is_caterpillar_forest(G: Trigraph) -> bool:
    if not is_forest(G):
        return False
    return all(is_caterpillar(G.subgraph(c)) for c in components(G))


def has_induced_star_subdivision(G: Trigraph) -> bool:
    """Is the 1-subdivision of K_{1,3} an induced subgraph?  Meant for sparse graphs."""
    nb = {v: G.neighbor_set(v) for v in G}
    for c in G:
        if len(nb[c]) < 3:
            continue
        for trio in combinations(sorted(nb[c]), 3):
            a1, a2, a3 = trio
            if a2 in nb[a1] or a3 in nb[a1] or a3 in nb[a2]:
                continue
            core = {c, a1, a2, a3}
            opts = []
            for a in trio:
                others = core - {a}
                opts.append([b for b in nb[a] if b not in core and not (nb[b] & others)])
            for b1 in opts[0]:
                for b2 in opts[1]:
                    if b2 == b1 or b2 in nb[b1]:
                        continue
                    for b3 in opts[2]:
                        if b3 not in (b1, b2) and b3 not in nb[b1] and b3 not in nb[b2]:
                            return True
    return False
