"""Edge-colored graph data model, mutation helpers, stats, and the ECG text format.

Vertices are 0-indexed in memory and 1-indexed in files. Edge colors are
integers in [1, c]. A graph is immutable after construction; operations that
"modify" a graph return a new one, so instances can be shared freely.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    ColorOutOfRangeError,
    DuplicateEdgeError,
    EdgeNotPresentError,
    LoopEdgeError,
    MalformedHeaderError,
    VertexOutOfRangeError,
)

Edge = tuple[int, int]

INFINITE_GIRTH = math.inf


def canon(u: int, v: int) -> Edge:
    """Canonical unordered pair: smaller endpoint first."""
    return (u, v) if u < v else (v, u)


class ColoredGraph:
    """Simple undirected graph whose edge set is partitioned into color classes.

    `c` is the declared number of colors; some color classes may be empty
    (deletion and induction routinely empty them, so this is not an error).
    """

    __slots__ = ("n", "c", "_colors", "_adj", "_nbrs")

    def __init__(self, n: int, c: int, edges: Iterable[tuple[int, int, int]] = ()):
        if n < 0:
            raise VertexOutOfRangeError(f"vertex count {n} is negative")
        if c < 0:
            raise ColorOutOfRangeError(f"color count {c} is negative")
        self.n = n
        self.c = c
        colors: dict[Edge, int] = {}
        adj: list[dict[int, int]] = [dict() for _ in range(n)]
        for u, v, col in edges:
            if u == v:
                raise LoopEdgeError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRangeError(f"edge ({u}, {v}) outside [0, {n})")
            if not (1 <= col <= c):
                raise ColorOutOfRangeError(f"color {col} outside [1, {c}]")
            e = canon(u, v)
            if e in colors:
                raise DuplicateEdgeError(f"edge {e} given twice")
            colors[e] = col
            adj[u][v] = col
            adj[v][u] = col
        self._colors = colors
        self._adj = tuple(adj)
        self._nbrs = tuple(tuple(sorted(a)) for a in adj)

    # -- basic queries --------------------------------------------------

    @property
    def m(self) -> int:
        return len(self._colors)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def color_of(self, u: int, v: int) -> int:
        try:
            return self._adj[u][v]
        except KeyError:
            raise EdgeNotPresentError(f"edge ({u}, {v}) not present") from None

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def color_neighbors(self, v: int, color: int) -> frozenset[int]:
        """N^i(v): neighbors joined to v by an edge of the given color."""
        return frozenset(u for u, col in self._adj[v].items() if col == color)

    def edges(self) -> list[tuple[int, int, int]]:
        """All edges as (u, v, color), canonical order."""
        return [(u, v, self._colors[(u, v)]) for (u, v) in sorted(self._colors)]

    def edge_pairs(self) -> list[Edge]:
        return sorted(self._colors)

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self._colors)

    def color_counts(self) -> dict[int, int]:
        counts = {i: 0 for i in range(1, self.c + 1)}
        for col in self._colors.values():
            counts[col] += 1
        return counts

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return self.n == other.n and self.c == other.c and self._colors == other._colors

    def __hash__(self) -> int:
        return hash((self.n, self.c, frozenset(self._colors.items())))

    def __repr__(self) -> str:
        return f"ColoredGraph(n={self.n}, m={self.m}, c={self.c})"

    # -- derived graphs -------------------------------------------------

    def remove_edges(self, deleted: Iterable[Edge]) -> "ColoredGraph":
        """Return the graph minus the given edges. Vertex set and c unchanged."""
        dead = set()
        for u, v in deleted:
            e = canon(u, v)
            if e not in self._colors:
                raise EdgeNotPresentError(f"edge {e} not present")
            dead.add(e)
        return ColoredGraph(
            self.n,
            self.c,
            ((u, v, col) for (u, v), col in self._colors.items() if (u, v) not in dead),
        )

    def add_edges(self, added: Iterable[tuple[int, int, int]]) -> "ColoredGraph":
        return ColoredGraph(
            self.n,
            self.c,
            list(((u, v, col) for (u, v), col in self._colors.items())) + list(added),
        )

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["ColoredGraph", tuple[int, ...]]:
        """Return (G[V'], original_ids) with V' reindexed to 0..|V'|-1.

        `original_ids[i]` is the id the new vertex i had in this graph.
        """
        vs = sorted(set(vertices))
        for v in vs:
            if not (0 <= v < self.n):
                raise VertexOutOfRangeError(f"vertex {v} outside [0, {self.n})")
        index = {v: i for i, v in enumerate(vs)}
        edges = [
            (index[u], index[v], col)
            for (u, v), col in self._colors.items()
            if u in index and v in index
        ]
        return ColoredGraph(len(vs), self.c, edges), tuple(vs)

    def connected_components(self) -> list[tuple[int, ...]]:
        """Vertex sets of connected components, ordered by smallest member."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack = [s]
            seen[s] = True
            comp = []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self._nbrs[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(tuple(sorted(comp)))
        return comps


# -- structural statistics ----------------------------------------------


@dataclass(frozen=True)
class StructuralStats:
    max_degree: int
    girth: float  # length of a shortest cycle; math.inf when acyclic
    component_count: int
    per_color_is_cluster: dict[int, bool]


def girth(g: ColoredGraph) -> float:
    """Shortest cycle length via BFS from every vertex; inf for forests."""
    best = INFINITE_GIRTH
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        head = 0
        while head < len(queue):
            x = queue[head]
            head += 1
            if 2 * dist[x] >= best:
                continue
            for y in g.neighbors(x):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y and dist[y] >= dist[x]:
                    cand = dist[x] + dist[y] + 1
                    if cand < best:
                        best = cand
    return best


def _color_is_cluster(g: ColoredGraph, color: int) -> bool:
    # (V, E_i) is a disjoint union of cliques iff each i-neighborhood is an i-clique.
    for v in range(g.n):
        nb = [u for u in g.neighbors(v) if g.color_of(v, u) == color]
        for i in range(len(nb)):
            for j in range(i + 1, len(nb)):
                a, b = nb[i], nb[j]
                if not (g.has_edge(a, b) and g.color_of(a, b) == color):
                    return False
    return True


def structural_stats(g: ColoredGraph) -> StructuralStats:
    max_degree = max((g.degree(v) for v in range(g.n)), default=0)
    return StructuralStats(
        max_degree=max_degree,
        girth=girth(g),
        component_count=len(g.connected_components()),
        per_color_is_cluster={i: _color_is_cluster(g, i) for i in range(1, g.c + 1)},
    )


# -- ECG text format ----------------------------------------------------
#
#   c <comment>
#   p ecg <n> <m> <c>
#   e <u> <v> <color>        (1-indexed, u != v)


def parse_graph(text: str | bytes) -> ColoredGraph:
    """Parse the ECG format. Raises a typed error naming the offending line."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    n = m = c = -1
    header_line = None
    edges: list[tuple[int, int, int]] = []
    seen: dict[Edge, int] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if header_line is not None:
                raise MalformedHeaderError("second header line", line_no)
            if len(fields) != 5 or fields[1] != "ecg":
                raise MalformedHeaderError(f"expected 'p ecg <n> <m> <c>', got {line!r}", line_no)
            try:
                n, m, c = (int(x) for x in fields[2:])
            except ValueError:
                raise MalformedHeaderError(f"non-integer header field in {line!r}", line_no) from None
            if n < 0 or m < 0 or c < 0:
                raise MalformedHeaderError("negative header value", line_no)
            header_line = line_no
        elif fields[0] == "e":
            if header_line is None:
                raise MalformedHeaderError("edge line before header", line_no)
            if len(fields) != 4:
                raise MalformedHeaderError(f"expected 'e <u> <v> <color>', got {line!r}", line_no)
            try:
                u, v, col = (int(x) for x in fields[1:])
            except ValueError:
                raise MalformedHeaderError(f"non-integer edge field in {line!r}", line_no) from None
            if u == v:
                raise LoopEdgeError(f"loop at vertex {u}", line_no)
            if not (1 <= u <= n and 1 <= v <= n):
                raise VertexOutOfRangeError(f"endpoint of ({u}, {v}) outside [1, {n}]", line_no)
            if not (1 <= col <= c):
                raise ColorOutOfRangeError(f"color {col} outside [1, {c}]", line_no)
            e = canon(u - 1, v - 1)
            if e in seen:
                raise DuplicateEdgeError(
                    f"pair ({u}, {v}) already given on line {seen[e]}", line_no
                )
            seen[e] = line_no
            edges.append((u - 1, v - 1, col))
        else:
            raise MalformedHeaderError(f"unknown line type {fields[0]!r}", line_no)
    if header_line is None:
        raise MalformedHeaderError("missing 'p ecg' header")
    if len(edges) != m:
        raise MalformedHeaderError(
            f"header declares m={m} but file has {len(edges)} edge lines", header_line
        )
    g = ColoredGraph(n, c, edges)
    used = {col for _, _, col in edges}
    empty = [i for i in range(1, c + 1) if i not in used]
    if empty:
        warnings.warn(f"color classes {empty} are empty", stacklevel=2)
    return g


def serialize_graph(g: ColoredGraph, comment: str | None = None) -> str:
    """Serialize to the ECG format, edges in canonical order."""
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"c {part}")
    lines.append(f"p ecg {g.n} {g.m} {g.c}")
    for u, v, col in g.edges():
        lines.append(f"e {u + 1} {v + 1} {col}")
    return "\n".join(lines) + "\n"


def load_graph(path) -> ColoredGraph:
    with open(path, "rb") as fh:
        return parse_graph(fh.read())


def save_graph(g: ColoredGraph, path, comment: str | None = None) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(serialize_graph(g, comment))
