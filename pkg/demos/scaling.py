"""Time the recognizer on growing random bipartite graphs of average degree 4."""

from intervalk.cli import bench

rows, exponent = bench([50, 100, 200, 400, 800], degree=4.0, seed=0, repeats=1)
for n, m, secs, verdict in rows:
    print(f"n={n:4d} m={m:5d} n*m={n * m:8d}  {secs:8.4f}s  {verdict}")
print(f"fitted exponent of time against n*m: {exponent:.2f}")
