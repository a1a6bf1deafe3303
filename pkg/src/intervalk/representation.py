"""Orderings, interval representations and their verifiers.

An ordering is pattern-free when there is no triple a < b < c with
``v_a v_c`` an edge, the colors of ``v_b`` and ``v_c`` adjacent in H, and
``v_b v_c`` a non-edge.  For H = K_k this single condition covers the three
forbidden k-graph patterns (see ``k_graph_patterns``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import ColoredGraph, PatternGraph


class NotAPermutation(ValueError):
    pass


class OrderingNotPatternFree(ValueError):
    pass


class RepresentationInvalid(ValueError):
    pass


@dataclass(frozen=True)
class PatternViolation:
    a: int
    b: int
    c: int
    tag: str

    def triple(self):
        return (self.a, self.b, self.c)

    def __str__(self):
        return f"{self.tag}: {self.a} < {self.b} < {self.c}"


def _pattern_tag(G: ColoredGraph, a, b, c) -> str:
    ca, cb = G.color[a], G.color[b]
    if ca == cb:
        return "same-color-ab"
    return "edge-ab" if G.adjacent(a, b) else "nonedge-ab"


def k_graph_patterns(G: ColoredGraph, a: int, b: int, c: int) -> Optional[str]:
    """Which of the three k-graph patterns the triple a<b<c matches, if any.

    Written out case by case, independently of ``verify_ordering``:
    all colors distinct with ab, ac edges and bc missing; all colors distinct
    with only ac; a and b sharing a color opposite c, with ac and no bc.
    """
    ca, cb, cc = G.color[a], G.color[b], G.color[c]
    ab, ac, bc = G.adjacent(a, b), G.adjacent(a, c), G.adjacent(b, c)
    if len({ca, cb, cc}) == 3 and ab and ac and not bc:
        return "edge-ab"
    if len({ca, cb, cc}) == 3 and not ab and ac and not bc:
        return "nonedge-ab"
    if ca == cb != cc and ac and not bc:
        return "same-color-ab"
    return None


def _check_perm(G: ColoredGraph, ordering: Sequence[int]) -> list[int]:
    ordering = list(ordering)
    if sorted(ordering) != list(range(G.n)):
        raise NotAPermutation(f"ordering is not a permutation of 0..{G.n - 1}")
    return ordering


def verify_ordering(G: ColoredGraph, H: PatternGraph, ordering: Sequence[int]) -> Optional[PatternViolation]:
    """None if the ordering is pattern-free, else the lexicographically first violation.

    The triple is reported as vertices ``(v_a, v_b, v_c)``; "first" refers
    to the positions (a, b, c).  Runs in O(n^2).
    """
    order = _check_perm(G, ordering)
    n = G.n
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    Hm = H.matrix()
    best = None
    for ci in range(n):
        c = order[ci]
        earlier = [pos[w] for w in G.neighbors[c] if pos[w] < ci]
        if not earlier:
            continue
        ai = min(earlier)
        cc = G.color[c]
        adj_c = G.adjsets[c]
        for bi in range(ai + 1, ci):
            b = order[bi]
            if Hm[G.color[b]][cc] and b not in adj_c:
                cand = (ai, bi, ci)
                if best is None or cand < best:
                    best = cand
                break
    if best is None:
        return None
    a, b, c = (order[i] for i in best)
    return PatternViolation(a, b, c, _pattern_tag(G, a, b, c))


def ordering_to_intervals(G: ColoredGraph, H: PatternGraph, ordering: Sequence[int]) -> list[tuple[int, int]]:
    """Integer closed intervals from a pattern-free ordering.

    The vertex at 1-based position i gets right end i and left end the
    smallest position among itself and its earlier neighbours.
    """
    order = _check_perm(G, ordering)
    bad = verify_ordering(G, H, order)
    if bad is not None:
        raise OrderingNotPatternFree(str(bad))
    pos = [0] * G.n
    for i, v in enumerate(order, start=1):
        pos[v] = i
    rep = []
    for v in range(G.n):
        i = pos[v]
        rep.append((min([i] + [pos[w] for w in G.neighbors[v] if pos[w] < i]), i))
    return rep


def intersect(I, J) -> bool:
    return I[0] <= J[1] and J[0] <= I[1]


def verify_representation(G: ColoredGraph, H: PatternGraph, rep) -> Optional[tuple[int, int]]:
    """None if the intervals realize G, else the lexicographically first bad pair.

    Only pairs whose colors are adjacent in H are constrained.
    """
    if len(rep) != G.n:
        raise RepresentationInvalid(f"expected {G.n} intervals, got {len(rep)}")
    for v, (l, r) in enumerate(rep):
        if l > r:
            raise RepresentationInvalid(f"interval of {v} has l > r")
    Hm = H.matrix()
    col = G.color
    for u in range(G.n):
        for v in range(u + 1, G.n):
            if Hm[col[u]][col[v]] and G.adjacent(u, v) != intersect(rep[u], rep[v]):
                return (u, v)
    return None


def intervals_to_ordering(G: ColoredGraph, H: PatternGraph, rep) -> list[int]:
    """Sort by (right end, left end, vertex id)."""
    bad = verify_representation(G, H, rep)
    if bad is not None:
        raise RepresentationInvalid(f"intervals disagree with G on pair {bad}")
    return sorted(range(G.n), key=lambda v: (rep[v][1], rep[v][0], v))
