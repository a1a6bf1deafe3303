"""Independent ground truth: ordering search and named obstructions.

Nothing here touches the pair digraph; the search works straight from the
forbidden-triple definition of a pattern-free ordering.
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from typing import Iterator, Optional, Sequence

from .graph import ColoredGraph, PatternGraph, is_connected


class InstanceTooLarge(ValueError):
    pass


ORDERING_BOUND = 9
EXOBICLIQUE_BOUND = 16


def _violates_at(G, Hm, prefix, c) -> bool:
    """Would appending c to prefix create a forbidden triple ending in c?"""
    adj_c = G.adjsets[c]
    cc = G.color[c]
    seen_neighbor = False
    for b in prefix:
        if seen_neighbor and b not in adj_c and Hm[G.color[b]][cc]:
            return True
        if b in adj_c:
            seen_neighbor = True
    return False


def brute_force_recognize(
    G: ColoredGraph, H: Optional[PatternGraph] = None, bound: int = ORDERING_BOUND
) -> Optional[list[int]]:
    """First pattern-free ordering found by backtracking, or None.

    A triple is decided as soon as its last vertex is placed, so a prefix
    containing a violation can be abandoned.
    """
    if G.n > bound:
        raise InstanceTooLarge(f"n={G.n} exceeds ordering-search bound {bound}")
    if H is None:
        H = PatternGraph.complete(G.k)
    Hm = H.matrix()
    n = G.n
    prefix: list[int] = []
    used = [False] * n

    def search() -> bool:
        if len(prefix) == n:
            return True
        for c in range(n):
            if used[c] or _violates_at(G, Hm, prefix, c):
                continue
            used[c] = True
            prefix.append(c)
            if search():
                return True
            prefix.pop()
            used[c] = False
        return False

    return list(prefix) if search() else None


def subset_recognize(G: ColoredGraph, H: Optional[PatternGraph] = None) -> Optional[list[int]]:
    """Exact search over sets of placed vertices instead of sequences.

    Appending b to a prefix S is illegal iff some unplaced c with a
    neighbour in S is H-adjacent to b but not adjacent to it: that c could
    never be placed afterwards.  Legality depends on S only, so failed
    sets are memoised.  Practical up to roughly 20 vertices.
    """
    if H is None:
        H = PatternGraph.complete(G.k)
    n = G.n
    full = (1 << n) - 1
    nbr = [sum(1 << w for w in G.neighbors[v]) for v in range(n)]
    bad = [
        sum(
            1 << c
            for c in range(n)
            if c != b and H.adjacent(G.color[b], G.color[c]) and not G.adjacent(b, c)
        )
        for b in range(n)
    ]
    dead = set()
    order: list[int] = []

    def extend(S: int, reach: int) -> bool:
        if S == full:
            return True
        if S in dead:
            return False
        armed = reach & ~S
        for b in range(n):
            bit = 1 << b
            if S & bit or armed & ~bit & bad[b]:
                continue
            order.append(b)
            if extend(S | bit, reach | nbr[b]):
                return True
            order.pop()
        dead.add(S)
        return False

    return list(order) if extend(0, 0) else None


def naive_recognize(G: ColoredGraph, H: Optional[PatternGraph] = None) -> Optional[list[int]]:
    """Full enumeration of permutations, every triple checked.  Tiny n only."""
    if H is None:
        H = PatternGraph.complete(G.k)
    for perm in permutations(range(G.n)):
        if not any(
            G.adjacent(a, c) and H.adjacent(G.color[b], G.color[c]) and not G.adjacent(b, c)
            for a, b, c in combinations(perm, 3)
        ):
            return list(perm)
    return None


def _bipartition(G: ColoredGraph):
    used = sorted(set(G.color))
    if len(used) > 2:
        raise ValueError("exobicliques are defined for two-colored graphs")
    B = [v for v in range(G.n) if G.color[v] == 0]
    W = [v for v in range(G.n) if G.color[v] != 0]
    return B, W


def _three_incomparable(G: ColoredGraph, candidates, target: frozenset) -> bool:
    hoods = [G.adjsets[x] & target for x in candidates]
    for i, j, k in combinations(range(len(hoods)), 3):
        trio = (hoods[i], hoods[j], hoods[k])
        if all(not (a <= b or b <= a) for a, b in combinations(trio, 2)):
            return True
    return False


def is_exobiclique(G: ColoredGraph, B1: Sequence[int], W1: Sequence[int]) -> bool:
    """Does (B1, W1) certify an exobiclique in the two-colored graph G?

    B1 must lie in color class 0 and W1 in the other class.
    """
    B, W = _bipartition(G)
    B1s, W1s = frozenset(B1), frozenset(W1)
    if not B1s or not W1s or not B1s <= set(B) or not W1s <= set(W):
        return False
    if any(w not in G.adjsets[b] for b in B1s for w in W1s):
        return False
    return _three_incomparable(G, [b for b in B if b not in B1s], W1s) and _three_incomparable(
        G, [w for w in W if w not in W1s], B1s
    )


def find_exobiclique(G: ColoredGraph, bound: int = EXOBICLIQUE_BOUND):
    """Exhaustive search for (B1, W1); None when there is none."""
    if G.n > bound:
        raise InstanceTooLarge(f"n={G.n} exceeds exobiclique-search bound {bound}")
    B, W = _bipartition(G)
    for r in range(1, len(B) + 1):
        for B1 in combinations(B, r):
            common = frozenset.intersection(*(G.adjsets[b] for b in B1)) & frozenset(W)
            if not common:
                continue
            common = sorted(common)
            for s in range(1, len(common) + 1):
                for W1 in combinations(common, s):
                    if is_exobiclique(G, B1, W1):
                        return list(B1), list(W1)
    return None


def matches_fig7_obstruction(G: ColoredGraph) -> bool:
    """Is G the 8-vertex obstruction with color classes of sizes 3, 3, 1, 1?

    The two singleton colors u, v are non-adjacent; one triple class is
    complete to {u, v}, and the other triple class is matched to it, with no
    further edges.
    """
    if G.n != 8 or G.m != 9:
        return False
    classes: dict[int, list[int]] = {}
    for v in range(G.n):
        classes.setdefault(G.color[v], []).append(v)
    sizes = sorted(len(c) for c in classes.values())
    if sizes != [1, 1, 3, 3]:
        return False
    singles = [c[0] for c in classes.values() if len(c) == 1]
    triples = [c for c in classes.values() if len(c) == 3]
    u, v = singles
    edges = set(G.edges())
    for hub, leaf in (triples, triples[::-1]):
        for hp in permutations(hub):
            for lp in permutations(leaf):
                want = set()
                for h, l in zip(hp, lp):
                    want.add((min(h, l), max(h, l)))
                    want.add((min(h, u), max(h, u)))
                    want.add((min(h, v), max(h, v)))
                if want == edges:
                    return True
    return False


def enumerate_instances(n_max: int, k: int, connected: bool = True) -> Iterator[ColoredGraph]:
    """Every colored graph with 1..n_max vertices and at most k colors.

    Up to color-preserving relabeling: vertices are laid out color by color
    with class sizes non-decreasing, which loses nothing because K_k is
    symmetric in its colors.  Duplicates remain.
    """
    for n in range(1, n_max + 1):
        for sizes in _class_sizes(n, k):
            colors = [c for c, s in enumerate(sizes) for _ in range(s)]
            cross = [(u, v) for u, v in combinations(range(n), 2) if colors[u] != colors[v]]
            for mask in range(1 << len(cross)):
                edges = [e for i, e in enumerate(cross) if mask >> i & 1]
                G = ColoredGraph(colors, edges, k=max(len(sizes), 1))
                if not connected or is_connected(G):
                    yield G


def _class_sizes(n: int, k: int):
    """Non-decreasing tuples of positive class sizes summing to n, at most k parts."""
    def rec(remaining, lo, parts):
        if remaining == 0:
            yield tuple(parts)
            return
        if len(parts) == k:
            return
        for s in range(lo, remaining + 1):
            yield from rec(remaining - s, s, parts + [s])

    yield from rec(n, 1, [])
