"""The growing set D of decided pairs, kept acyclic as a relation on V(G).

Reachability inside the relation is maintained incrementally as Python-int
bitsets (``desc[u]`` / ``anc[v]``), so testing whether a new pair closes a
circuit is a single bit test.  A transitive pair never changes that
relation's reachability, so only pairs entering through components or
arcs of G+ ever pay for an update.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from typing import Callable, Optional

from .pairdigraph import PairDigraph


class AttemptedBothOrientations(RuntimeError):
    pass


class NoAttribution(RuntimeError):
    pass


@dataclass(frozen=True)
class Circuit:
    """Cyclic sequence of pairs (x0,x1),(x1,x2),...,(xn,x0)."""

    witness: tuple

    def __post_init__(self):
        w = self.witness
        assert w and all(w[i][1] == w[(i + 1) % len(w)][0] for i in range(len(w)))

    def __len__(self):
        return len(self.witness)

    def __str__(self):
        return "->".join(f"({a},{b})" for a, b in self.witness)


# provenance tags
COMPONENT = "component"
REACHED = "reached"
TRANSITIVE = "transitive"
CHOSEN = "chosen"


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class OrderState:
    """Decided pairs with level, stamp, Dic label and provenance.

    ``prov[p]`` is one of ``(COMPONENT, s)``, ``(REACHED, q)``,
    ``(TRANSITIVE, w, left, right)`` or ``(CHOSEN,)``.
    """

    def __init__(self, PD: PairDigraph, trace: Optional[Callable[[str], None]] = None):
        self.PD = PD
        n = self.n = PD.n
        self.decided = bytearray(n * n)
        self.level: dict[int, int] = {}
        self.stamp: dict[int, int] = {}
        self.dic: dict[int, Optional[int]] = {}
        self.prov: dict[int, tuple] = {}
        self.order: list[int] = []
        self.succ = [0] * n
        self.pred = [0] * n
        self.desc = [0] * n
        self.anc = [0] * n
        self.trace = trace

    # -- queries ------------------------------------------------------------
    def __contains__(self, pair) -> bool:
        u, v = pair
        return bool(self.decided[u * self.n + v])

    def __len__(self):
        return len(self.order)

    def pairs(self) -> list[tuple[int, int]]:
        return [divmod(p, self.n) for p in self.order]

    def relation_is_acyclic(self) -> bool:
        """Full DFS check, independent of the incremental bitsets."""
        n = self.n
        succ = [[] for _ in range(n)]
        for p in self.order:
            u, v = divmod(p, n)
            succ[u].append(v)
        color = [0] * n
        for s in range(n):
            if color[s]:
                continue
            color[s] = 1
            stack = [(s, iter(succ[s]))]
            while stack:
                u, it = stack[-1]
                for w in it:
                    if color[w] == 1:
                        return False
                    if color[w] == 0:
                        color[w] = 1
                        stack.append((w, iter(succ[w])))
                        break
                else:
                    color[u] = 2
                    stack.pop()
        return True

    def closes_circuit(self, p: int) -> bool:
        u, v = divmod(p, self.n)
        return bool((self.desc[v] >> u) & 1)

    def witness(self, p: int) -> Circuit:
        """Circuit formed by pair p together with a shortest D-path from v back to u."""
        n = self.n
        u, v = divmod(p, n)
        parent = {v: None}
        queue = deque([v])
        while queue:
            x = queue.popleft()
            if x == u:
                break
            for y in _bits(self.succ[x]):
                if y not in parent:
                    parent[y] = x
                    queue.append(y)
        path = []
        x = u
        while parent[x] is not None:
            path.append((parent[x], x))
            x = parent[x]
        path.reverse()
        return Circuit(((u, v),) + tuple(path))

    # -- mutation -----------------------------------------------------------
    def _emit(self, text):
        if self.trace is not None:
            self.trace(text)

    def _insert(self, p: int, lvl: int, dic, prov: tuple) -> None:
        n = self.n
        u, v = divmod(p, n)
        if self.decided[v * n + u]:
            raise AttemptedBothOrientations(f"({v},{u}) is already decided")
        self.decided[p] = 1
        t = len(self.order)
        self.order.append(p)
        self.level[p] = lvl
        self.stamp[p] = t
        self.dic[p] = dic
        self.prov[p] = prov
        self.succ[u] |= 1 << v
        self.pred[v] |= 1 << u
        if not (self.desc[u] >> v) & 1:
            A = self.anc[u] | (1 << u)
            B = self.desc[v] | (1 << v)
            desc, anc = self.desc, self.anc
            for a in _bits(A):
                desc[a] |= B
            for b in _bits(B):
                anc[b] |= A
        if self.trace is not None:
            self._emit(
                f"ADD ({u},{v}) lvl={lvl} stamp={t} dic="
                + (f"S{dic}" if dic is not None else "-")
                + f" prov={self._fmt_prov(prov)}"
            )

    def _fmt_prov(self, prov):
        n = self.n
        if prov[0] == COMPONENT:
            return f"component(S{prov[1]})"
        if prov[0] == REACHED:
            a, b = divmod(prov[1], n)
            return f"reached({a},{b})"
        if prov[0] == TRANSITIVE:
            return f"transitive(via={prov[1]})"
        return prov[0]

    def snapshot(self):
        return (
            len(self.order),
            self.succ[:],
            self.pred[:],
            self.desc[:],
            self.anc[:],
        )

    def restore(self, snap) -> None:
        size, succ, pred, desc, anc = snap
        for p in self.order[size:]:
            self.decided[p] = 0
            del self.level[p], self.stamp[p], self.dic[p], self.prov[p]
        del self.order[size:]
        self.succ, self.pred, self.desc, self.anc = succ, pred, desc, anc

    def try_add(self, pairs, lvl: int = 0, dic_id=None, prov: Optional[tuple] = None) -> Optional[Circuit]:
        """Insert a batch of pair indices atomically.

        Returns None on success.  If some pair would close a circuit, the
        state is rolled back and that circuit is returned.  A pair whose
        reverse is already decided counts as closing a 2-circuit.
        """
        if prov is None:
            prov = (COMPONENT, dic_id)
        snap = self.snapshot()
        for p in pairs:
            if self.decided[p]:
                continue
            if self.closes_circuit(p):
                circuit = self.witness(p)
                self.restore(snap)
                self._emit(f"CIRCUIT: {circuit}")
                self._emit(f"ROLLBACK to {snap[0]} pairs")
                return circuit
            self._insert(p, lvl, dic_id, prov)
        return None

    def add_pairs(self, pairs, lvl=0, dic_id=None) -> Optional[Circuit]:
        """``try_add`` taking ``(u, v)`` tuples."""
        n = self.n
        return self.try_add([u * n + v for u, v in pairs], lvl, dic_id)

    # -- envelope -----------------------------------------------------------
    def _joins(self, p: int, heap: list, seq: list) -> None:
        """Queue the transitive pairs that p completes with decided pairs."""
        n = self.n
        a, b = divmod(p, n)
        lvl_p = self.level[p]
        st_p = self.stamp[p]
        pred_b = self.pred[b] | (1 << b)
        for x in _bits(self.pred[a] & ~pred_b):
            left = x * n + a
            q = x * n + b
            lvl = max(self.level[left], lvl_p) + 1
            seq[0] += 1
            heapq.heappush(heap, (lvl, self.stamp[left], st_p, seq[0], q, (TRANSITIVE, a, left, p)))
        succ_a = self.succ[a] | (1 << a)
        for y in _bits(self.succ[b] & ~succ_a):
            right = b * n + y
            q = a * n + y
            lvl = max(self.level[right], lvl_p) + 1
            seq[0] += 1
            heapq.heappush(heap, (lvl, st_p, self.stamp[right], seq[0], q, (TRANSITIVE, b, p, right)))

    def close(
        self,
        on_circuit: Callable[[int, tuple, Circuit], bool],
        on_insert: Optional[Callable[[int, tuple], object]] = None,
        start: int = 0,
    ) -> bool:
        """Extend D to its envelope N*[D].

        Transitive pairs are taken level by level; after each one the
        reachability closure is followed immediately.  Only pairs from
        ``order[start:]`` seed the joins, so ``start`` may skip a prefix
        that is already transitively closed.  ``on_circuit(p, prov,
        circuit)`` is called for a pair that would close a circuit: return
        True to withhold the pair and continue, False to stop.  ``on_insert``
        supplies the Dic label of a pair about to be inserted.  Returns
        False iff stopped.
        """
        n = self.n
        out = self.PD.out
        heap: list = []
        seq = [0]
        withheld = set()
        for p in self.order[start:]:
            self._joins(p, heap, seq)

        def admit(q, lvl, prov):
            if self.closes_circuit(q):
                circuit = self.witness(q)
                self._emit(f"CIRCUIT: {circuit}")
                withheld.add(q)
                return on_circuit(q, prov, circuit)
            dic = on_insert(q, prov) if on_insert else None
            self._insert(q, lvl, dic, prov)
            self._joins(q, heap, seq)
            return None

        while heap:
            lvl, _, _, _, q, prov = heapq.heappop(heap)
            if self.decided[q] or q in withheld:
                continue
            verdict = admit(q, lvl, prov)
            if verdict is False:
                return False
            if verdict is True:
                continue
            queue = deque([q])
            while queue:
                r = queue.popleft()
                for s in out[r]:
                    if self.decided[s] or s in withheld:
                        continue
                    verdict = admit(s, lvl, (REACHED, r))
                    if verdict is False:
                        return False
                    if verdict is None:
                        queue.append(s)
        return True

    def reach_close(self, on_circuit, on_insert=None, start: int = 0) -> bool:
        """Close D under reachability only (pairs from ``order[start:]`` outward)."""
        out = self.PD.out
        queue = deque(self.order[start:])
        while queue:
            r = queue.popleft()
            for s in out[r]:
                if self.decided[s]:
                    continue
                if self.closes_circuit(s):
                    circuit = self.witness(s)
                    self._emit(f"CIRCUIT: {circuit}")
                    if not on_circuit(s, (REACHED, r), circuit):
                        return False
                    continue
                prov = (REACHED, r)
                dic = on_insert(s, prov) if on_insert else None
                self._insert(s, self.level[r], dic, prov)
                queue.append(s)
        return True

    def envelope(self):
        """Emissions (pair, level, provenance) extending D to N*[D], or a Circuit.

        Stops at the first circuit.  D is extended in place.
        """
        start = len(self.order)
        found = []

        def stop(q, prov, circuit):
            found.append(circuit)
            return False

        self.close(stop)
        if found:
            return found[0]
        n = self.n
        return [
            (divmod(p, n), self.level[p], self.prov[p]) for p in self.order[start:]
        ]

    # -- Dic attribution ------------------------------------------------------
    def dictator_of(self, p: int, prov: Optional[tuple] = None) -> int:
        """Component whose choice is blamed for pair p.

        Follows domination and transitivity back through earlier pairs until
        a pair placed together with a whole component is reached.  Among
        dominating pairs the one with the smallest stamp is used.
        """
        n = self.n
        col = self.PD.G.color
        seen = set()
        while True:
            if p in seen:
                raise NoAttribution(f"cycle in attribution at pair {divmod(p, n)}")
            seen.add(p)
            if self.decided[p]:
                d = self.dic.get(p)
                if d is not None:
                    return d
                prov = self.prov[p]
                bound = self.stamp[p]
            else:
                bound = len(self.order)
            x, y = divmod(p, n)
            if prov is not None and prov[0] == COMPONENT:
                return prov[1]
            if prov is not None and prov[0] == TRANSITIVE:
                w = prov[1]
                p = w * n + y if col[x] == col[y] else x * n + w
                prov = None
                continue
            # dominated: earliest dominating pair of the expected shape
            doms = [q for q in self.PD.in_arcs(p) if self.decided[q] and self.stamp[q] < bound]
            if not doms:
                raise NoAttribution(f"pair {divmod(p, n)} has no earlier dominating pair")
            if col[x] != col[y]:
                shaped = [q for q in doms if q % n == y]
            else:
                shaped = [q for q in doms if q // n == x]
            pool = shaped or doms
            p = min(pool, key=self.stamp.__getitem__)
            prov = None
