"""Recognition of interval k-graphs (and interval H-graphs) with a given partition.

Per connected component:

1. build G+ and its strong components; a self-coupled component rejects;
2. Stage 1: place one of every coupled pair of non-trivial components, each
   together with its reachability closure, backing off to the couple when
   the first choice closes a circuit;
3. Stage 2: grow the envelope, blaming every circuit on the component the
   offending pair is attributed to (the dictators);
4. Stage 3: swap every dictator for its couple, rebuild the envelope, and
   reject if it still has a circuit;
5. Stage 4: orient the remaining undecided pairs one sink at a time,
   re-closing after each.

The decided relation is then a transitive tournament; its order is the
answer.  Accepted orderings are re-checked by the pattern and interval
verifiers before being returned.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from .graph import ColoredGraph, PatternGraph, connected_components
from .orderstate import CHOSEN, Circuit, OrderState
from .pairdigraph import PairDigraph
from .representation import (
    ordering_to_intervals,
    verify_ordering,
    verify_representation,
)

ACCEPT = "accept"
REJECT = "reject"


@dataclass
class Evidence:
    """Why a component was rejected.

    kind is one of ``self_coupled``, ``stage1_both_fail``, ``stage3_circuit``,
    ``stage4_circuit`` or ``internal_verification_failure``.  Vertices in
    ``pairs`` / ``circuits`` use the ids of the input graph.
    """

    kind: str
    pairs: list = field(default_factory=list)
    circuits: list = field(default_factory=list)
    components: list = field(default_factory=list)
    triple: Optional[tuple] = None

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "pairs": [list(p) for p in self.pairs]}
        if self.circuits:
            d["circuits"] = [[list(p) for p in c] for c in self.circuits]
        if self.components:
            d["components"] = list(self.components)
        if self.triple is not None:
            d["triple"] = list(self.triple)
        return d


@dataclass
class RecognitionOutcome:
    verdict: str
    ordering: Optional[list] = None
    intervals: Optional[list] = None
    evidence: Optional[Evidence] = None
    stats: dict = field(default_factory=dict)

    @property
    def accepted(self) -> bool:
        return self.verdict == ACCEPT

    def to_dict(self) -> dict:
        d = {"verdict": self.verdict}
        if self.accepted:
            d["ordering"] = list(self.ordering)
            d["intervals"] = [{"v": v, "l": l, "r": r} for v, (l, r) in enumerate(self.intervals)]
        else:
            d["evidence"] = self.evidence.to_dict()
        d["stats"] = dict(self.stats)
        return d


class _Rejected(Exception):
    def __init__(self, evidence: Evidence):
        self.evidence = evidence


@dataclass
class ComponentRun:
    """Everything the pipeline produced for one connected component."""

    PD: PairDigraph
    state: Optional[OrderState] = None
    placed: list = field(default_factory=list)
    dictators: list = field(default_factory=list)
    stage2_circuits: list = field(default_factory=list)
    ordering: Optional[list] = None


def _stage1_order(G: ColoredGraph) -> list[int]:
    return sorted(range(G.n), key=lambda v: (G.color[v], v))


def stage1(PD: PairDigraph, st: OrderState) -> list[int]:
    """Place one component of every non-trivial coupled pair.  Returns them in order."""
    n = PD.n
    order = _stage1_order(PD.G)
    handled = set()
    placed = []
    for i, vi in enumerate(order):
        for vj in order[i + 1:]:
            s = PD.comp[vi * n + vj]
            if PD.is_trivial(s) or s in handled:
                continue
            t = PD.couple[s]
            handled.update((s, t))
            first = st.try_add(PD.closure_indices(PD.members[s]), 0, s)
            if first is None:
                placed.append(s)
                continue
            second = st.try_add(PD.closure_indices(PD.members[t]), 0, t)
            if second is None:
                placed.append(t)
                continue
            raise _Rejected(Evidence(
                "stage1_both_fail",
                pairs=[PD.pair(PD.members[s][0]), PD.pair(PD.members[t][0])],
                circuits=[list(first.witness), list(second.witness)],
                components=[s, t],
            ))
    return placed


def stage2(PD: PairDigraph, st: OrderState) -> tuple[list[int], list[Circuit]]:
    """Drain the envelope; collect the components blamed for circuits."""
    dictators: list[int] = []
    circuits: list[Circuit] = []

    def on_insert(q, prov):
        return st.dictator_of(q, prov)

    def on_circuit(q, prov, circuit):
        s = st.dictator_of(q, prov)
        if s not in dictators:
            dictators.append(s)
        circuits.append(circuit)
        return True

    st.close(on_circuit, on_insert)
    return dictators, circuits


def stage3(PD: PairDigraph, placed: list[int], dictators: list[int], trace=None) -> OrderState:
    """Fresh D from couples of dictators plus retained components, then its envelope."""
    st = OrderState(PD, trace)
    blamed = set(dictators)
    for s in placed:
        chosen = PD.couple[s] if s in blamed else s
        circuit = st.try_add(PD.closure_indices(PD.members[chosen]), 0, chosen)
        if circuit is not None:
            raise _Rejected(Evidence(
                "stage3_circuit", pairs=list(circuit.witness),
                circuits=[list(circuit.witness)], components=sorted(blamed),
            ))
    found = []

    def stop(q, prov, circuit):
        found.append(circuit)
        return False

    if not st.close(stop):
        c = found[0]
        raise _Rejected(Evidence(
            "stage3_circuit", pairs=list(c.witness),
            circuits=[list(c.witness)], components=sorted(blamed),
        ))
    return st


def stage4(PD: PairDigraph, st: OrderState) -> OrderState:
    """Orient every undecided pair, always choosing a sink among undecided pairs."""
    n = PD.n
    decided = st.decided
    out = PD.out

    def open_pair(p):
        return not decided[p] and not decided[PD.rev(p)]

    pending = [0] * (n * n)
    heap = []
    for p in PD.pair_indices():
        if open_pair(p):
            cnt = sum(1 for q in out[p] if open_pair(q))
            pending[p] = cnt
            if cnt == 0:
                heap.append(p)
    heapq.heapify(heap)
    seen = len(st.order)

    def retire(q):
        # q and its reverse just left the undecided set
        for r in (q, PD.rev(q)):
            for p in PD.in_arcs(r):
                if open_pair(p):
                    pending[p] -= 1
                    if pending[p] == 0:
                        heapq.heappush(heap, p)

    found = []

    def stop(q, prov, circuit):
        found.append(circuit)
        return False

    while heap:
        p = heapq.heappop(heap)
        if not open_pair(p):
            continue
        start = len(st.order)
        circuit = st.try_add([p], 0, None, (CHOSEN,))
        if circuit is None and not st.close(stop, start=start):
            circuit = found[0]
        if circuit is not None:
            raise _Rejected(Evidence(
                "stage4_circuit", pairs=list(circuit.witness), circuits=[list(circuit.witness)],
            ))
        for q in st.order[seen:]:
            retire(q)
        seen = len(st.order)
    return st


def extract_ordering(st: OrderState) -> list[int]:
    """Topological order of the decided relation, ties by vertex id."""
    n = st.n
    indeg = [bin(st.pred[v]).count("1") for v in range(n)]
    heap = [v for v in range(n) if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        u = heapq.heappop(heap)
        order.append(u)
        x = st.succ[u]
        while x:
            low = x & -x
            w = low.bit_length() - 1
            x ^= low
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    if len(order) != n:
        raise RuntimeError("decided relation has a cycle")
    return order


def run_component(G: ColoredGraph, H: PatternGraph, trace=None, rules: str = "unified") -> ComponentRun:
    """Run all stages on a connected colored graph.  Raises _Rejected."""
    PD = PairDigraph(G, H, rules=rules)
    run = ComponentRun(PD)
    if PD.self_coupled:
        s = PD.self_coupled[0]
        p = PD.members[s][0]
        u, v = PD.pair(p)
        raise _Rejected(Evidence(
            "self_coupled", pairs=[(u, v), (v, u)],
            circuits=[[(u, v), (v, u)]], components=[s],
        ))
    st = OrderState(PD, trace)
    run.placed = stage1(PD, st)
    run.state = st
    run.dictators, run.stage2_circuits = stage2(PD, st)
    if run.dictators:
        st = stage3(PD, run.placed, run.dictators, trace)
        run.state = st
    st = stage4(PD, st)
    run.state = st
    run.ordering = extract_ordering(st)
    return run


def _lift(evidence: Evidence, verts: list[int]) -> Evidence:
    m = lambda p: (verts[p[0]], verts[p[1]])
    evidence.pairs = [m(p) for p in evidence.pairs]
    evidence.circuits = [[m(p) for p in c] for c in evidence.circuits]
    if evidence.triple is not None:
        evidence.triple = tuple(verts[x] for x in evidence.triple)
    return evidence


def recognize(
    G: ColoredGraph,
    H: Optional[PatternGraph] = None,
    trace: Optional[Callable[[str], None]] = None,
    rules: str = "unified",
) -> RecognitionOutcome:
    """Decide whether G (with its coloring) is an interval H-graph.

    H defaults to K_k.  Each connected component is handled on its own and
    the component orderings are concatenated, smallest vertex first.
    """
    if H is None:
        H = PatternGraph.complete(G.k)
    t0 = time.perf_counter()
    comps = connected_components(G)
    ordering: list[int] = []
    n_dictators = 0
    evidence = None
    for verts in comps:
        if len(verts) == 1:
            ordering.extend(verts)
            continue
        sub = G.subgraph(verts)
        sub_trace = None
        if trace is not None:
            sub_trace = trace
            trace(f"COMPONENT {verts}")
        try:
            run = run_component(sub, H, sub_trace, rules)
        except _Rejected as rej:
            evidence = _lift(rej.evidence, verts)
            break
        n_dictators += len(run.dictators)
        ordering.extend(verts[v] for v in run.ordering)

    stats = {"n": G.n, "m": G.m, "components": len(comps), "dictators": n_dictators}
    if evidence is None:
        bad = verify_ordering(G, H, ordering)
        if bad is not None:
            evidence = Evidence("internal_verification_failure", triple=bad.triple())
        else:
            intervals = ordering_to_intervals(G, H, ordering)
            mismatch = verify_representation(G, H, intervals)
            if mismatch is not None:
                evidence = Evidence("internal_verification_failure", pairs=[mismatch])
    stats["millis"] = round((time.perf_counter() - t0) * 1000.0, 3)
    if evidence is not None:
        return RecognitionOutcome(REJECT, evidence=evidence, stats=stats)
    return RecognitionOutcome(ACCEPT, ordering=ordering, intervals=intervals, stats=stats)
