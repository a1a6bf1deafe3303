"""Interval H-graphs: only some color pairs are constrained.

The spider below has a centre of color 2 and three legs of length two
(color 1, then color 0).  As a 3-graph it is rejected.  With H the path
0-1-2, colors 0 and 2 never interact, which frees enough room to accept.
"""

from intervalk import parse_graph, recognize

BODY = """\
k 3
v 0 0 a0
v 1 1 a1
v 2 0 b0
v 3 2 hub
v 4 1 b1
v 5 0 c0
v 6 1 c1
e 0 1
e 1 3
e 2 4
e 3 4
e 3 6
e 5 6
"""

G, K3 = parse_graph(BODY)
out = recognize(G, K3)
print("as an interval 3-graph:", out.verdict, f"({out.evidence.kind})")

G, H = parse_graph(BODY + "h 0 1\nh 1 2\n")
out = recognize(G, H)
print("with H = path 0-1-2:", out.verdict)
for v in out.ordering:
    l, r = out.intervals[v]
    print(f"  {G.label(v):>3} color {G.color[v]}: [{l},{r}]")
