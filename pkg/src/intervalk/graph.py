"""Colored graphs, pattern graphs, the line-oriented text format and generators.

A colored graph is a simple graph on vertices ``0..n-1`` with a color in
``0..k-1`` attached to every vertex.  The pattern graph ``H`` says which
color classes are allowed to be adjacent; the default ``H = K_k`` is the
interval k-graph setting.

Text format, one record per line::

    c any comment
    k 3
    v 0 0 a
    v 1 1
    e 0 1
    h 0 1
"""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence


class GraphFormatError(ValueError):
    """Malformed or inconsistent graph input.  ``line`` is 1-based, or None."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class PatternGraph:
    k: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        for a, b in self.edges:
            if a == b:
                raise GraphFormatError(f"pattern graph has a loop at color {a}")
            if not (0 <= a < b < self.k):
                raise GraphFormatError(f"pattern edge ({a},{b}) out of range for k={self.k}")

    @classmethod
    def complete(cls, k: int) -> "PatternGraph":
        return cls(k, frozenset(combinations(range(k), 2)))

    @classmethod
    def from_edges(cls, k: int, edges: Iterable[tuple[int, int]]) -> "PatternGraph":
        return cls(k, frozenset((min(a, b), max(a, b)) for a, b in edges))

    @property
    def is_complete(self) -> bool:
        return len(self.edges) == self.k * (self.k - 1) // 2

    def adjacent(self, a: int, b: int) -> bool:
        if a == b:
            return False
        return (a, b) in self.edges if a < b else (b, a) in self.edges

    def matrix(self) -> list[list[bool]]:
        m = [[False] * self.k for _ in range(self.k)]
        for a, b in self.edges:
            m[a][b] = m[b][a] = True
        return m


class ColoredGraph:
    """Immutable simple graph with a total coloring.

    ``neighbors[v]`` is a sorted tuple, ``adjsets[v]`` a frozenset for O(1)
    membership tests.
    """

    __slots__ = ("n", "k", "color", "neighbors", "adjsets", "labels", "_m")

    def __init__(
        self,
        colors: Sequence[int],
        edges: Iterable[tuple[int, int]],
        k: Optional[int] = None,
        labels: Optional[Sequence[Optional[str]]] = None,
    ):
        self.n = len(colors)
        self.color = tuple(int(c) for c in colors)
        if any(c < 0 for c in self.color):
            raise GraphFormatError("negative color")
        observed = max(self.color, default=-1) + 1
        self.k = observed if k is None else int(k)
        if self.k < observed:
            raise GraphFormatError(f"color {observed - 1} not below k={self.k}")
        adj: list[set] = [set() for _ in range(self.n)]
        for u, v in edges:
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphFormatError(f"edge ({u},{v}) references unknown vertex")
            adj[u].add(v)
            adj[v].add(u)
        self.neighbors = tuple(tuple(sorted(s)) for s in adj)
        self.adjsets = tuple(frozenset(s) for s in adj)
        self._m = sum(len(s) for s in adj) // 2
        if labels is None:
            labels = [None] * self.n
        self.labels = tuple(labels)

    @property
    def m(self) -> int:
        return self._m

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.adjsets[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.neighbors[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def label(self, v: int) -> str:
        return self.labels[v] or str(v)

    def vertex_by_label(self, label: str) -> int:
        for v, lab in enumerate(self.labels):
            if lab == label:
                return v
        raise KeyError(label)

    def subgraph(self, vertices: Sequence[int]) -> "ColoredGraph":
        """Induced subgraph, relabeled ``0..len(vertices)-1`` in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [
            (index[u], index[w])
            for u in vertices
            for w in self.neighbors[u]
            if w in index and index[u] < index[w]
        ]
        return ColoredGraph(
            [self.color[v] for v in vertices],
            edges,
            k=self.k,
            labels=[self.labels[v] for v in vertices],
        )

    def __eq__(self, other):
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return (
            self.k == other.k
            and self.color == other.color
            and self.neighbors == other.neighbors
            and self.labels == other.labels
        )

    def __hash__(self):
        return hash((self.k, self.color, self.neighbors))

    def __repr__(self):
        return f"ColoredGraph(n={self.n}, m={self.m}, k={self.k})"


def non_edges(G: ColoredGraph, H: PatternGraph) -> set[tuple[int, int]]:
    """Pairs {u,v} (u<v) whose colors are H-adjacent but which are not edges of G."""
    return {
        (u, v)
        for u, v in combinations(range(G.n), 2)
        if H.adjacent(G.color[u], G.color[v]) and not G.adjacent(u, v)
    }


def check_against_pattern(G: ColoredGraph, H: PatternGraph) -> None:
    """Raise GraphFormatError unless every edge joins H-adjacent colors."""
    if G.k > H.k:
        raise GraphFormatError(f"graph uses k={G.k} colors but pattern graph has {H.k}")
    for u, v in G.edges():
        cu, cv = G.color[u], G.color[v]
        if cu == cv:
            raise GraphFormatError(f"same-color edge ({u},{v}) in color {cu}")
        if not H.adjacent(cu, cv):
            raise GraphFormatError(f"edge ({u},{v}) joins colors {cu},{cv} not adjacent in H")


def _ints(fields, lineno, count):
    if len(fields) < count:
        raise GraphFormatError(f"expected {count} integer fields", lineno)
    try:
        vals = [int(f) for f in fields[:count]]
    except ValueError:
        raise GraphFormatError(f"non-integer field in {' '.join(fields)!r}", lineno) from None
    if any(x < 0 for x in vals):
        raise GraphFormatError("negative integer", lineno)
    return vals


def parse_graph(text) -> tuple[ColoredGraph, PatternGraph]:
    """Parse the text format.  Accepts ``str`` or ``bytes``.

    Without any ``h`` line the pattern graph is ``K_k`` (k-graph mode),
    in which a same-color edge is an error.
    """
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    k_decl = None
    vertices: dict[int, tuple[int, Optional[str], int]] = {}
    edges: list[tuple[int, int, int]] = []
    hedges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split()
        if not fields or fields[0] == "c" or fields[0].startswith("#"):
            continue
        tag, rest = fields[0], fields[1:]
        if tag == "k":
            if k_decl is not None:
                raise GraphFormatError("duplicate k line", lineno)
            (k_decl,) = _ints(rest, lineno, 1)
        elif tag == "v":
            vid, col = _ints(rest, lineno, 2)
            if len(rest) > 3:
                raise GraphFormatError("too many fields in v line", lineno)
            if vid in vertices:
                raise GraphFormatError(f"duplicate vertex id {vid}", lineno)
            vertices[vid] = (col, rest[2] if len(rest) == 3 else None, lineno)
        elif tag == "e":
            if len(rest) != 2:
                raise GraphFormatError("e line needs exactly two vertex ids", lineno)
            u, v = _ints(rest, lineno, 2)
            edges.append((u, v, lineno))
        elif tag == "h":
            if len(rest) != 2:
                raise GraphFormatError("h line needs exactly two colors", lineno)
            a, b = _ints(rest, lineno, 2)
            if a == b:
                raise GraphFormatError(f"pattern loop at color {a}", lineno)
            hedges.append((a, b, lineno))
        else:
            raise GraphFormatError(f"unknown record type {tag!r}", lineno)

    n = len(vertices)
    for vid, (_, _, lineno) in vertices.items():
        if vid >= n:
            raise GraphFormatError(f"vertex ids must be 0..{n - 1}, got {vid}", lineno)
    colors = [vertices[v][0] for v in range(n)]
    labels = [vertices[v][1] for v in range(n)]
    observed = max(colors, default=-1) + 1
    if k_decl is None:
        k = max([observed] + [max(a, b) + 1 for a, b, _ in hedges])
    else:
        k = k_decl
        for v in range(n):
            if colors[v] >= k:
                raise GraphFormatError(f"color {colors[v]} not below k={k}", vertices[v][2])
        for a, b, lineno in hedges:
            if max(a, b) >= k:
                raise GraphFormatError(f"pattern color out of range for k={k}", lineno)
    H = PatternGraph.from_edges(k, [(a, b) for a, b, _ in hedges]) if hedges else PatternGraph.complete(k)

    clean = []
    for u, v, lineno in edges:
        for x in (u, v):
            if x not in vertices:
                raise GraphFormatError(f"edge references unknown vertex {x}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        cu, cv = colors[u], colors[v]
        if cu == cv:
            raise GraphFormatError(f"same-color edge ({u},{v}) in color {cu}", lineno)
        if hedges and not H.adjacent(cu, cv):
            raise GraphFormatError(f"edge ({u},{v}) joins colors {cu},{cv} not adjacent in H", lineno)
        clean.append((u, v))
    return ColoredGraph(colors, clean, k=k, labels=labels), H


def read_graph(path) -> tuple[ColoredGraph, PatternGraph]:
    """Read a graph file; ``*.json`` files use the JSON mirror."""
    path = str(path)
    with open(path, "rb") as fh:
        data = fh.read()
    if path.endswith(".json"):
        return graph_from_json(data)
    return parse_graph(data)


def render_graph(G: ColoredGraph, H: Optional[PatternGraph] = None) -> str:
    lines = [f"k {G.k}"]
    for v in range(G.n):
        lab = G.labels[v]
        lines.append(f"v {v} {G.color[v]}" + (f" {lab}" if lab else ""))
    for u, v in G.edges():
        lines.append(f"e {u} {v}")
    if H is not None and not H.is_complete:
        for a, b in sorted(H.edges):
            lines.append(f"h {a} {b}")
    return "\n".join(lines) + "\n"


def graph_to_json(G: ColoredGraph, H: Optional[PatternGraph] = None) -> str:
    doc = {
        "k": G.k,
        "vertices": [
            {"id": v, "color": G.color[v], **({"label": G.labels[v]} if G.labels[v] else {})}
            for v in range(G.n)
        ],
        "edges": [list(e) for e in G.edges()],
    }
    if H is not None and not H.is_complete:
        doc["h"] = [list(e) for e in sorted(H.edges)]
    return json.dumps(doc, sort_keys=True)


def graph_from_json(data) -> tuple[ColoredGraph, PatternGraph]:
    try:
        doc = json.loads(data)
        verts = sorted(doc["vertices"], key=lambda d: d["id"])
        if [d["id"] for d in verts] != list(range(len(verts))):
            raise GraphFormatError("vertex ids must be 0..n-1")
        colors = [int(d["color"]) for d in verts]
        labels = [d.get("label") for d in verts]
        edges = [tuple(e) for e in doc.get("edges", [])]
        k = doc.get("k")
        hedges = doc.get("h")
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, GraphFormatError):
            raise
        raise GraphFormatError(f"bad JSON graph: {exc}") from None
    G = ColoredGraph(colors, edges, k=k, labels=labels)
    H = PatternGraph.from_edges(G.k, hedges) if hedges else PatternGraph.complete(G.k)
    check_against_pattern(G, H)
    return G, H


def connected_components(G: ColoredGraph) -> list[list[int]]:
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.neighbors[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(G: ColoredGraph) -> bool:
    return len(connected_components(G)) <= 1


def gen_random(
    n: int, k: int, p: float, seed: int = 0, H: Optional[PatternGraph] = None
) -> ColoredGraph:
    """Round-robin coloring, then each allowed cross-color pair kept with probability p.

    Pairs are visited in lexicographic order and drawn from
    ``random.Random(seed)`` (Mersenne Twister), so a seed fixes the graph.
    """
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    if k < 2:
        raise ValueError("k must be at least 2")
    rng = random.Random(seed)
    colors = [v % k for v in range(n)]
    if H is None:
        H = PatternGraph.complete(k)
    edges = []
    for u, v in combinations(range(n), 2):
        if H.adjacent(colors[u], colors[v]) and rng.random() < p:
            edges.append((u, v))
    return ColoredGraph(colors, edges, k=k)
