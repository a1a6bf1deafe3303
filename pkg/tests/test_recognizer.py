import json
import random

import pytest
from hypothesis import given, settings

from intervalk.graph import ColoredGraph, PatternGraph, connected_components
from intervalk.oracle import brute_force_recognize, subset_recognize
from intervalk.orderstate import OrderState
from intervalk.pairdigraph import build
from intervalk.recognizer import (
    ACCEPT,
    REJECT,
    _Rejected,
    extract_ordering,
    recognize,
    run_component,
    stage1,
    stage2,
    stage3,
)
from intervalk.representation import verify_ordering, verify_representation

from conftest import GOLDEN, fixture, pattern_instances, random_graph

EXPECTED = {
    "fig5": "stage1_both_fail",
    "fig6": "stage1_both_fail",
    "fig7": "self_coupled",
    "c6": "self_coupled",
    "p4": ACCEPT,
    "p3": ACCEPT,
    "k22": ACCEPT,
    "k3": ACCEPT,
}


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_fixture_verdicts(name):
    G, H = fixture(name)
    out = recognize(G, H)
    if EXPECTED[name] == ACCEPT:
        assert out.accepted
        assert verify_ordering(G, H, out.ordering) is None
        assert verify_representation(G, H, out.intervals) is None
    else:
        assert out.verdict == REJECT
        assert out.evidence.kind == EXPECTED[name]
    if G.n <= 9:
        assert (brute_force_recognize(G, H) is not None) == out.accepted
    else:
        assert (subset_recognize(G, H) is not None) == out.accepted


def test_fig5_evidence_circuits():
    G, H = fixture("fig5")
    ev = recognize(G, H).evidence
    assert [len(c) for c in ev.circuits] == [4, 4]
    for circuit in ev.circuits:
        for i, (a, b) in enumerate(circuit):
            assert circuit[(i + 1) % len(circuit)][0] == b


def test_single_edge():
    out = recognize(ColoredGraph([0, 1], [(0, 1)]))
    assert out.accepted and out.ordering == [0, 1]
    assert out.intervals == [(1, 1), (1, 2)]


def test_k22_golden_ordering():
    G, H = fixture("k22")
    assert recognize(G, H).ordering == [0, 1, 2, 3]


def test_empty_and_isolated():
    assert recognize(ColoredGraph([], [], k=2)).ordering == []
    out = recognize(ColoredGraph([0, 1, 0], [], k=2))
    assert out.ordering == [0, 1, 2]
    assert out.intervals == [(1, 1), (2, 2), (3, 3)]


def test_star_stage1_adds_nothing():
    star = ColoredGraph([0, 1, 1, 1], [(0, 1), (0, 2), (0, 3)])
    PD = build(star)
    assert all(PD.is_trivial(s) for s in range(PD.n_components))
    st = OrderState(PD)
    assert stage1(PD, st) == [] and len(st) == 0
    assert recognize(star).accepted


def test_independent_edges_stage1():
    G = ColoredGraph([0, 1, 0, 1], [(0, 1), (2, 3)])
    PD = build(G)
    st = OrderState(PD)
    placed = stage1(PD, st)
    assert len(placed) == 1
    s = placed[0]
    D = set(st.pairs())
    assert set(PD.component_pairs(s)) <= D
    assert not set(PD.component_pairs(PD.couple[s])) & D


def test_disconnected_evidence_is_lifted():
    # an accepted edge, then a 6-cycle on vertices 2..7
    cyc = [(2 + i, 2 + (i + 1) % 6) for i in range(6)]
    G = ColoredGraph([0, 1] + [i % 2 for i in range(6)], [(0, 1)] + cyc)
    out = recognize(G)
    assert out.evidence.kind == "self_coupled"
    assert all(v >= 2 for p in out.evidence.pairs for v in p)
    assert out.stats["components"] == 2


def test_disconnected_accept_concatenates():
    G = ColoredGraph([0, 1, 0, 1], [(0, 3), (1, 2)])
    out = recognize(G)
    comps = connected_components(G)
    assert out.accepted
    assert out.ordering[:2] in (comps[0], comps[0][::-1])


def test_outcome_json_shape():
    G, H = fixture("p4")
    doc = json.loads(json.dumps(recognize(G, H).to_dict()))
    assert doc["verdict"] == "accept"
    assert doc["intervals"][0] == {"v": 0, "l": doc["intervals"][0]["l"], "r": doc["intervals"][0]["r"]}
    assert set(doc["stats"]) == {"n", "m", "components", "dictators", "millis"}
    G, H = fixture("fig5")
    doc = recognize(G, H).to_dict()
    assert doc["verdict"] == "reject"
    assert doc["evidence"]["kind"] == "stage1_both_fail"
    assert "ordering" not in doc


def test_determinism_including_trace():
    for name in ("fig5", "fig6", "p4", "k22"):
        G, H = fixture(name)
        logs = [[], []]
        outs = [recognize(G, H, trace=log.append) for log in logs]
        a, b = (o.to_dict() for o in outs)
        a["stats"].pop("millis"), b["stats"].pop("millis")
        assert a == b
        assert logs[0] == logs[1]


def test_trace_reports_components():
    lines = []
    G, H = fixture("fig5")
    recognize(G, H, trace=lines.append)
    assert lines[0].startswith("COMPONENT ")
    assert any(l.startswith("ADD ") for l in lines)
    assert any(l.startswith("CIRCUIT: ") for l in lines)


def accepted_instances(count, seed):
    rng = random.Random(seed)
    found = []
    while len(found) < count:
        G = random_graph(rng, n_max=8, k_max=4, connected=True, n_min=3)
        run = None
        try:
            run = run_component(G, PatternGraph.complete(G.k))
        except _Rejected:
            continue
        found.append((G, run))
    return found


def test_arcs_respect_final_ordering():
    for G, run in accepted_instances(150, 1):
        pos = {v: i for i, v in enumerate(run.ordering)}
        for (u, v), (u2, v2) in run.PD.arcs():
            if pos[u] < pos[v]:
                assert pos[u2] < pos[v2]


def test_final_relation_is_transitive_tournament():
    for G, run in accepted_instances(100, 2):
        D = set(run.state.pairs())
        n = G.n
        for u in range(n):
            for v in range(u + 1, n):
                assert ((u, v) in D) != ((v, u) in D)
        for a, b in D:
            for c, d in D:
                if b == c and a != d:
                    assert (a, d) in D
        assert extract_ordering(run.state) == run.ordering


def test_stage3_swaps_blamed_components():
    tried = 0
    rng = random.Random(6)
    while tried < 60:
        G = random_graph(rng, n_max=8, k_max=3, connected=True)
        PD = build(G)
        if PD.self_coupled:
            continue
        st = OrderState(PD)
        try:
            placed = stage1(PD, st)
        except _Rejected:
            continue
        if not placed:
            continue
        tried += 1
        blamed = placed[:1]
        try:
            st3 = stage3(PD, placed, blamed)
        except _Rejected as rej:
            assert rej.evidence.kind == "stage3_circuit"
            assert rej.evidence.components == sorted(blamed)
            continue
        D = set(st3.pairs())
        assert set(PD.component_pairs(PD.couple[blamed[0]])) <= D
        assert not set(PD.component_pairs(blamed[0])) & D
        for s in placed[1:]:
            assert set(PD.component_pairs(s)) <= D
        assert st3.relation_is_acyclic()


def test_stage2_blames_component():
    G = ColoredGraph(
        [2, 2, 0, 0, 1, 1],
        [(0, 2), (0, 3), (0, 4), (1, 3), (1, 5), (2, 4), (2, 5), (3, 4)],
    )
    PD = build(G)
    st = OrderState(PD)
    for p in [(3, 0), (0, 4), (4, 2)]:
        assert st.add_pairs([p], dic_id=PD.component_of(*p)) is None
    dictators, circuits = stage2(PD, st)
    assert dictators and circuits
    assert set(dictators) <= {PD.component_of(*p) for p in [(3, 0), (0, 4), (4, 2)]}
    assert st.relation_is_acyclic()


@given(pattern_instances(n_max=7))
@settings(max_examples=150)
def test_h_graphs_agree_with_oracle(inst):
    G, H = inst
    out = recognize(G, H)
    assert out.evidence is None or out.evidence.kind != "internal_verification_failure"
    assert out.accepted == (brute_force_recognize(G, H) is not None)


def test_larger_instances_agree_with_subset_search():
    rng = random.Random(21)
    for _ in range(150):
        G = random_graph(rng, n_max=14, k_max=3, connected=True, n_min=9)
        assert recognize(G).accepted == (subset_recognize(G) is not None)


def test_unknown_rules_rejected():
    with pytest.raises(ValueError):
        recognize(ColoredGraph([0, 1], [(0, 1)]), rules="nope")
