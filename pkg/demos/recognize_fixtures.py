"""Run the recognizer over every bundled fixture and explain each verdict."""

from pathlib import Path

from intervalk import read_graph, recognize

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

for path in sorted(FIXTURES.glob("*.graph")):
    G, H = read_graph(path)
    out = recognize(G, H)
    print(f"{path.stem:6s} n={G.n:2d} m={G.m:2d} k={G.k}  {out.verdict.upper()}")
    if out.accepted:
        names = [G.label(v) for v in out.ordering]
        print("        ordering:", " < ".join(names))
    else:
        ev = out.evidence
        print(f"        evidence: {ev.kind}")
        for circuit in ev.circuits:
            hops = " -> ".join(f"({G.label(a)},{G.label(b)})" for a, b in circuit)
            print(f"        circuit of length {len(circuit)}: {hops}")
