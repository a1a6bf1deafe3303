"""Compare the recognizer with exhaustive search on random colored graphs."""

import random
import sys
import time
from collections import Counter

from intervalk import ColoredGraph, recognize
from intervalk.oracle import subset_recognize

sys.setrecursionlimit(10000)
rng = random.Random(int(sys.argv[1]) if len(sys.argv) > 1 else 1)
kinds = Counter()
disagree = 0
t0 = time.perf_counter()
for _ in range(400):
    n, k = rng.randint(4, 14), rng.randint(2, 4)
    colors = [rng.randrange(k) for _ in range(n)]
    p = rng.uniform(0.1, 0.6)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if colors[u] != colors[v] and rng.random() < p]
    G = ColoredGraph(colors, edges, k=k)
    out = recognize(G)
    kinds[out.evidence.kind if out.evidence else "accept"] += 1
    disagree += out.accepted != (subset_recognize(G) is not None)
print(f"400 instances in {time.perf_counter() - t0:.1f}s, disagreements: {disagree}")
for kind, count in kinds.most_common():
    print(f"  {kind:20s} {count}")
