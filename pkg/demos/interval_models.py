"""From an accepted ordering to intervals, drawn as text bars.

Two vertices of different colors are adjacent exactly when their bars
overlap; bars of one color may overlap freely.
"""

from intervalk import ColoredGraph, recognize, verify_representation
from intervalk.graph import PatternGraph


def draw(G, intervals):
    width = max(r for _, r in intervals)
    for v, (l, r) in enumerate(intervals):
        bar = " " * (l - 1) + "#" * (r - l + 1)
        print(f"  {G.label(v):>3} c{G.color[v]} |{bar:<{width}}| [{l},{r}]")


# a caterpillar: spine 0-1-2-3, two legs on 1 and one on 2
G = ColoredGraph(
    [0, 1, 0, 1, 0, 0, 1],
    [(0, 1), (1, 2), (2, 3), (1, 4), (1, 5), (2, 6)],
    labels=["s0", "s1", "s2", "s3", "a", "b", "c"],
)
out = recognize(G)
print("caterpillar:", out.verdict)
draw(G, out.intervals)
print("representation check:", verify_representation(G, PatternGraph.complete(2), out.intervals) or "ok")

# three colors: a triangle plus a pendant vertex of the first color
T = ColoredGraph([0, 1, 2, 0], [(0, 1), (0, 2), (1, 2), (3, 2)], labels=["x", "y", "z", "w"])
out = recognize(T)
print("\ntriangle with pendant:", out.verdict)
draw(T, out.intervals)
