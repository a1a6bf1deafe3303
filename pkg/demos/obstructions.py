"""The named obstructions: an exobiclique and the 4-colored graph on 8 vertices."""

from pathlib import Path

from intervalk import read_graph, recognize
from intervalk.oracle import find_exobiclique, is_exobiclique, matches_fig7_obstruction

FIX = Path(__file__).resolve().parent.parent / "fixtures"

G, H = read_graph(FIX / "fig5.graph")
B1 = [G.vertex_by_label(x) for x in "def"]
W1 = [G.vertex_by_label(x) for x in "123"]
print("biclique {d,e,f} x {1,2,3} is an exobiclique:", is_exobiclique(G, B1, W1))
found = find_exobiclique(G)
print("exhaustive search finds:", [G.label(v) for v in found[0]], [G.label(v) for v in found[1]])
print("recognizer:", recognize(G, H).evidence.kind)

G, H = read_graph(FIX / "fig6.graph")
found = find_exobiclique(G, bound=G.n)
print("\nthe 19-vertex bigraph also hides one:", found)
print("recognizer:", recognize(G, H).evidence.kind)

G, H = read_graph(FIX / "fig7.graph")
print("\n4-colored obstruction recognized by shape:", matches_fig7_obstruction(G))
out = recognize(G, H)
print("recognizer:", out.evidence.kind, "via pairs", out.evidence.pairs)
