"""What the pair digraph looks like on three small graphs."""

from intervalk import ColoredGraph, build

print("two independent edges u-u', v-v' (u=0, u'=1, v=2, v'=3)")
G = ColoredGraph([0, 1, 0, 1], [(0, 1), (2, 3)])
PD = build(G)
print(PD.dump())
s = PD.component_of(0, 2)
print(f"(0,2) sits in S{s}, its couple is S{PD.couple[s]}; self-coupled: {bool(PD.self_coupled)}")

print("\nthe 6-cycle: some component contains a pair and its reverse")
C6 = ColoredGraph([i % 2 for i in range(6)], [(i, (i + 1) % 6) for i in range(6)])
PD = build(C6)
s = PD.self_coupled[0]
print(f"S{s} has {len(PD.members[s])} pairs, e.g. {PD.component_pairs(s)[:4]}")

print("\na star has no forced choices at all")
star = ColoredGraph([0, 1, 1, 1], [(0, 1), (0, 2), (0, 3)])
PD = build(star)
print("non-trivial components:", [c for c in range(PD.n_components) if not PD.is_trivial(c)])
print("arcs:", len(list(PD.arcs())))
