"""The pair digraph G+ on ordered vertex pairs.

A pair ``(u, v)`` stands for the claim "u comes before v".  An arc
``(u,v) -> (u',v')`` means that any pattern-free ordering with u before v
must also put u' before v'.  With adjacency in G and in the pattern graph H
the arcs are

    R1: (u,v) -> (u',v)   when uu' in E(G), u'v not in E(G), c(u')c(v) in E(H)
    R2: (u,v) -> (u,v')   when vv' in E(G), uv not in E(G), c(u)c(v) in E(H)

R1 and R2 are exchanged by reversing both pairs, which is where skew
symmetry comes from.  For H = K_k they coincide with the four arc types of
the k-graph construction (see ``four_type_arcs``).

Pairs are addressed internally by the integer ``u * n + v``.
"""

from __future__ import annotations

import heapq
from collections import deque
from typing import Iterable, Iterator, Optional

from .graph import ColoredGraph, PatternGraph

RULES = ("unified", "literal_h")


def _out_unified(G, Hm, u, v):
    n = G.n
    cv = G.color[v]
    adj_v = G.adjsets[v]
    col = G.color
    out = []
    for u2 in G.neighbors[u]:
        if u2 != v and u2 not in adj_v and Hm[col[u2]][cv]:
            out.append(u2 * n + v)
    if v not in G.adjsets[u] and Hm[col[u]][cv]:
        base = u * n
        out.extend(base + v2 for v2 in G.neighbors[v])
    return out


def _out_literal_h(G, Hm, u, v):
    # the two rules as worded for interval H-graphs, kept for auditing
    n = G.n
    col = G.color
    out = []
    adj_v = G.adjsets[v]
    for u2 in G.neighbors[u]:
        if u2 != v and u2 not in adj_v and Hm[col[u]][col[u2]]:
            out.append(u2 * n + v)
    if v not in G.adjsets[u] and col[u] != col[v]:
        for v2 in G.neighbors[v]:
            if v2 != u and Hm[col[v]][col[v2]]:
                out.append(u * n + v2)
    return out


def out_arcs(G: ColoredGraph, H: PatternGraph, u: int, v: int, rules: str = "unified") -> list[tuple[int, int]]:
    """On-the-fly arc generator: out-neighbours of pair (u, v) as tuples."""
    fn = _out_unified if rules == "unified" else _out_literal_h
    n = G.n
    return [divmod(q, n) for q in fn(G, H.matrix(), u, v)]


def four_type_arcs(G: ColoredGraph, u: int, v: int) -> set[tuple[int, int]]:
    """Out-neighbours of (u, v) under the four k-graph arc types, read literally.

    Only meaningful for H = K_k.  Type two's "u, v, v' all different" is read
    with u' in place of v' since the arc does not involve any v'.
    """
    col = G.color
    adj = G.adjacent
    out = set()
    for w in range(G.n):
        if w in (u, v):
            continue
        # (u,v) -> (w,v), w playing u'
        if col[u] == col[v] and adj(u, w) and not adj(v, w):
            out.add((w, v))
        if (
            adj(u, w)
            and col[w] != col[v] and not adj(w, v)
            and len({col[u], col[v], col[w]}) == 3
        ):
            out.add((w, v))
        # (u,v) -> (u,w), w playing v'
        if col[u] == col[w] and adj(v, w) and not adj(u, v):
            out.add((u, w))
        if (
            adj(v, w)
            and col[u] != col[v] and not adj(u, v)
            and len({col[u], col[v], col[w]}) == 3
        ):
            out.add((u, w))
    return out


class PairDigraph:
    """G+ with its strong components and the coupling between them.

    Attributes
    ----------
    out : list of lists
        ``out[p]`` are the out-neighbours of pair index ``p``; diagonal
        indices hold empty lists.
    comp : list[int]
        Component id of every pair (-1 on the diagonal).  Ids follow a
        reverse topological order of the condensation, ties going to the
        component with the lexicographically smaller least pair.
    members : list[list[int]]
        Sorted pair indices of each component.
    couple : list[int]
        ``couple[s]`` is the component obtained by reversing every pair of s.
    """

    def __init__(self, G: ColoredGraph, H: PatternGraph, rules: str = "unified"):
        if rules not in RULES:
            raise ValueError(f"unknown arc rules {rules!r}")
        self.G = G
        self.H = H
        self.rules = rules
        self.n = n = G.n
        Hm = H.matrix()
        fn = _out_unified if rules == "unified" else _out_literal_h
        out = [[] for _ in range(n * n)]
        for u in range(n):
            for v in range(n):
                if u != v:
                    out[u * n + v] = fn(G, Hm, u, v)
        self.out = out
        self.n_arcs = sum(len(a) for a in out)
        self._components()

    # -- pair helpers -------------------------------------------------------
    def idx(self, u: int, v: int) -> int:
        return u * self.n + v

    def pair(self, p: int) -> tuple[int, int]:
        return divmod(p, self.n)

    def rev(self, p: int) -> int:
        u, v = divmod(p, self.n)
        return v * self.n + u

    def pair_indices(self) -> Iterator[int]:
        n = self.n
        return (p for p in range(n * n) if p // n != p % n)

    def in_arcs(self, p: int) -> list[int]:
        """Predecessors of p, read off the reversed pair by skew symmetry."""
        rev = self.rev
        return [rev(q) for q in self.out[rev(p)]]

    def arcs(self) -> Iterator[tuple[tuple[int, int], tuple[int, int]]]:
        pair = self.pair
        for p in self.pair_indices():
            for q in self.out[p]:
                yield pair(p), pair(q)

    # -- components ---------------------------------------------------------
    def _tarjan(self) -> list[list[int]]:
        n2 = self.n * self.n
        n = self.n
        out = self.out
        index = [-1] * n2
        low = [0] * n2
        on_stack = [False] * n2
        stack: list[int] = []
        sccs: list[list[int]] = []
        counter = 0
        for root in range(n2):
            if index[root] != -1 or root // n == root % n:
                continue
            index[root] = low[root] = counter
            counter += 1
            stack.append(root)
            on_stack[root] = True
            work = [(root, 0)]
            while work:
                p, i = work[-1]
                nbrs = out[p]
                if i < len(nbrs):
                    work[-1] = (p, i + 1)
                    q = nbrs[i]
                    if index[q] == -1:
                        index[q] = low[q] = counter
                        counter += 1
                        stack.append(q)
                        on_stack[q] = True
                        work.append((q, 0))
                    elif on_stack[q] and index[q] < low[p]:
                        low[p] = index[q]
                    continue
                work.pop()
                if work:
                    parent = work[-1][0]
                    if low[p] < low[parent]:
                        low[parent] = low[p]
                if low[p] == index[p]:
                    scc = []
                    while True:
                        q = stack.pop()
                        on_stack[q] = False
                        scc.append(q)
                        if q == p:
                            break
                    sccs.append(scc)
        return sccs

    def _components(self):
        n2 = self.n * self.n
        raw = self._tarjan()
        raw_of = [-1] * n2
        for i, scc in enumerate(raw):
            for p in scc:
                raw_of[p] = i
        # canonical numbering: repeatedly take the remaining sink with least pair
        succ = [set() for _ in raw]
        pred_count_rev = [0] * len(raw)  # number of successors not yet numbered
        preds = [set() for _ in raw]
        for i, scc in enumerate(raw):
            for p in scc:
                for q in self.out[p]:
                    j = raw_of[q]
                    if j != i:
                        succ[i].add(j)
        for i, s in enumerate(succ):
            pred_count_rev[i] = len(s)
            for j in s:
                preds[j].add(i)
        least = [min(scc) for scc in raw]
        heap = [(least[i], i) for i in range(len(raw)) if pred_count_rev[i] == 0]
        heapq.heapify(heap)
        order = []
        while heap:
            _, i = heapq.heappop(heap)
            order.append(i)
            for j in preds[i]:
                pred_count_rev[j] -= 1
                if pred_count_rev[j] == 0:
                    heapq.heappush(heap, (least[j], j))
        assert len(order) == len(raw)
        comp = [-1] * n2
        members = []
        for new_id, i in enumerate(order):
            scc = sorted(raw[i])
            members.append(scc)
            for p in scc:
                comp[p] = new_id
        self.comp = comp
        self.members = members
        self.couple = [comp[self.rev(scc[0])] for scc in members]
        self.self_coupled = [s for s, c in enumerate(self.couple) if c == s]

    @property
    def n_components(self) -> int:
        return len(self.members)

    def is_trivial(self, s: int) -> bool:
        return len(self.members[s]) == 1

    def component_of(self, u: int, v: int) -> int:
        return self.comp[u * self.n + v]

    def component_pairs(self, s: int) -> list[tuple[int, int]]:
        return [self.pair(p) for p in self.members[s]]

    # -- reachability -------------------------------------------------------
    def closure_indices(self, start: Iterable[int], blocked: Optional[bytearray] = None) -> list[int]:
        """Pairs reachable from ``start`` (inclusive), in BFS discovery order.

        Pairs flagged in ``blocked`` are neither entered nor expanded.
        """
        seen = set()
        order = []
        queue = deque()
        for p in start:
            if p not in seen and not (blocked and blocked[p]):
                seen.add(p)
                order.append(p)
                queue.append(p)
        out = self.out
        while queue:
            p = queue.popleft()
            for q in out[p]:
                if q not in seen and not (blocked and blocked[q]):
                    seen.add(q)
                    order.append(q)
                    queue.append(q)
        return order

    def reach_closure(self, pairs: Iterable[tuple[int, int]]) -> set[tuple[int, int]]:
        """N+[R]: every pair reachable from R, R included."""
        n = self.n
        idxs = []
        for u, v in pairs:
            if u == v:
                raise ValueError(f"({u},{v}) is not a pair")
            idxs.append(u * n + v)
        return {self.pair(p) for p in self.closure_indices(idxs)}

    # -- debug dump ---------------------------------------------------------
    def dump(self) -> str:
        fmt = lambda p: f"({p[0]},{p[1]})"
        lines = [f"{fmt(a)} -> {fmt(b)}" for a, b in sorted(self.arcs())]
        for s, scc in enumerate(self.members):
            body = ", ".join(fmt(self.pair(p)) for p in scc)
            lines.append(f"S{s}: {{{body}}} couple=S{self.couple[s]}")
        return "\n".join(lines) + "\n"


def build(G: ColoredGraph, H: Optional[PatternGraph] = None, rules: str = "unified") -> PairDigraph:
    if H is None:
        H = PatternGraph.complete(G.k)
    return PairDigraph(G, H, rules=rules)
