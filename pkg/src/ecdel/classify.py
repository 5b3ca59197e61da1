"""Structural recognizers for edge-colored graphs.

Covers four analyses:
  * colored neighborhood classes and their count gamma,
  * color diversity of a colored graph / of every graph matching a pattern,
  * cascade status of a graph w.r.t. a pattern (can deletions create new
    induced occurrences?),
  * recognition of bicolored fence / clique-star graphs with a
    forbidden-subgraph witness on rejection.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from typing import Iterator

from .errors import InvalidSpecError, NotBicoloredError
from .graph import ColoredGraph, Edge, canon
from .patterns import CYCLE, PATH, Occurrence, PatternSpec, conflict_edges, validate_spec

BLUE = 1
RED = 2


# -- colored neighborhood classes ----------------------------------------


@dataclass(frozen=True)
class ClassInfo:
    vertices: tuple[int, ...]
    clique_color: int | None  # None when the class is an independent set

    @property
    def is_clique(self) -> bool:
        return self.clique_color is not None


@dataclass(frozen=True)
class ClassPartition:
    classes: tuple[ClassInfo, ...]
    gamma: int

    def class_of(self, v: int) -> int:
        for i, k in enumerate(self.classes):
            if v in k.vertices:
                return i
        raise KeyError(v)


def qualifying_colors(g: ColoredGraph, u: int, v: int) -> list[int]:
    """Colors i for which the closed-neighborhood case of u ~ v holds."""
    out = []
    for i in range(1, g.c + 1):
        nu = g.color_neighbors(u, i) | {u}
        nv = g.color_neighbors(v, i) | {v}
        if nu != nv:
            continue
        if all(
            g.color_neighbors(u, j) == g.color_neighbors(v, j)
            for j in range(1, g.c + 1)
            if j != i
        ):
            out.append(i)
    return out


def same_class(g: ColoredGraph, u: int, v: int) -> bool:
    """Do u and v have identical colored neighborhoods (closed in at most one color)?"""
    if u == v:
        return True
    if all(
        g.color_neighbors(u, j) == g.color_neighbors(v, j) for j in range(1, g.c + 1)
    ):
        return True
    return bool(qualifying_colors(g, u, v))


def colored_classes(g: ColoredGraph) -> ClassPartition:
    """Partition the vertices into colored neighborhood classes.

    Classes are listed in canonical order (by smallest member); gamma is the
    class count. Each class is an independent set or a monochromatic clique.
    """
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(g.n):
        for v in range(u + 1, g.n):
            if find(u) != find(v) and same_class(g, u, v):
                parent[find(v)] = find(u)

    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    classes = []
    for members in sorted(groups.values(), key=lambda ms: ms[0]):
        color = None
        if len(members) >= 2 and g.has_edge(members[0], members[1]):
            color = g.color_of(members[0], members[1])
        classes.append(ClassInfo(tuple(members), color))
    return ClassPartition(tuple(classes), len(classes))


def is_color_diverse(g: ColoredGraph) -> bool:
    """True iff every colored neighborhood class is a single vertex."""
    return colored_classes(g).gamma == g.n


def pattern_colorings(kind: str, length: int, colors: int) -> Iterator[ColoredGraph]:
    """All colorings of a path/cycle on `length` vertices using exactly
    `colors` distinct colors (color names 1..colors, all of them used)."""
    edge_count = length if kind == CYCLE else length - 1
    pairs = [(i, i + 1) for i in range(length - 1)]
    if kind == CYCLE:
        pairs.append((0, length - 1))
    for assignment in itertools.product(range(1, colors + 1), repeat=edge_count):
        if len(set(assignment)) != colors:
            continue
        yield ColoredGraph(
            length, colors, [(u, v, col) for (u, v), col in zip(pairs, assignment)]
        )


def spec_is_color_diverse(spec: PatternSpec) -> bool:
    """True iff every colored graph matching the spec is color diverse.

    Closed form, cross-validated against is_color_diverse over exhaustive
    colorings in the test suite. Specs no graph can match (more colors than
    edges) are vacuously True.
    """
    validate_spec(spec)
    if spec.kind == PATH:
        if spec.colors > spec.length - 1:
            return True
        if spec.length >= 4:
            return True
        # a monochromatic path shares its endpoint neighborhoods at length 3,
        # and a single edge is one closed-neighborhood class
        return spec.length == 3 and spec.colors == 2
    # cycles: antipodal vertices of a 4-cycle collide for <= 2 colors, and a
    # triangle needs all three edge colors distinct to separate its vertices
    if spec.length >= 5:
        return True
    return spec.colors >= 3


# -- cascade status -------------------------------------------------------

STRICTLY_NON_CASCADING = "strictly-non-cascading"
NON_CASCADING = "non-cascading"
CASCADING = "cascading"


@dataclass(frozen=True)
class CascadeStatus:
    status: str
    witness: Occurrence | None  # a non-induced occurrence demonstrating the status

    @property
    def is_non_cascading(self) -> bool:
        return self.status in (STRICTLY_NON_CASCADING, NON_CASCADING)


def _noninduced_walks(
    g: ColoredGraph, spec: PatternSpec, chord_whitelist: frozenset[Edge] | None
) -> Iterator[Occurrence]:
    """Canonical-order iterator over non-induced occurrences.

    With a whitelist, only occurrences whose chords ALL lie inside it are
    produced; partial walks are abandoned the moment they pick up an outside
    chord, since that chord persists in every completion. Without a
    whitelist all non-induced occurrences are produced.
    """
    L = spec.length
    want = spec.colors
    cyclic = spec.kind == CYCLE
    total_edges = L if cyclic else L - 1
    if total_edges < want or L < 3:
        return
    adj = g._adj
    nbrs = g._nbrs
    seq = [0] * L
    cols = [0] * L

    def extend(i: int, used: int, distinct: int, has_chord: bool) -> Iterator[Occurrence]:
        last = seq[i - 1]
        start = seq[0]
        closing = cyclic and i == L - 1
        for v in nbrs[last]:
            if cyclic and v <= start:
                continue
            col = adj[last][v]
            bit = 1 << col
            ndistinct = distinct + (0 if used & bit else 1)
            if ndistinct > want or ndistinct + (total_edges - i) < want:
                continue
            row = adj[v]
            ok = True
            chord = has_chord
            for j in range(i):
                w = seq[j]
                if w == v:
                    ok = False
                    break
                if j < i - 1 and w in row and not (closing and j == 0):
                    if chord_whitelist is not None and canon(v, w) not in chord_whitelist:
                        ok = False
                        break
                    chord = True
            if not ok:
                continue
            if closing:
                if start not in row:
                    continue
                closecol = row[start]
                fdistinct = ndistinct + (0 if (used | bit) & (1 << closecol) else 1)
                if fdistinct != want or seq[1] > v or not chord:
                    continue
                seq[i] = v
                cols[i] = col
                yield Occurrence(tuple(seq), tuple(cols[1:] + [closecol]), cyclic=True)
                continue
            seq[i] = v
            cols[i] = col
            if i + 1 == L:
                if ndistinct == want and start < v and chord:
                    yield Occurrence(tuple(seq), tuple(cols[1:]), cyclic=False)
            else:
                yield from extend(i + 1, used | bit, ndistinct, chord)

    for s in range(g.n):
        seq[0] = s
        yield from extend(1, 0, 0, False)


def cascade_status(g: ColoredGraph, spec: PatternSpec) -> CascadeStatus:
    """Classify whether edge deletions can surface new induced occurrences.

    Strictly non-cascading: no non-induced occurrence exists at all.
    Non-cascading: every non-induced occurrence has a conflict-free chord,
    so deleting conflict edges can never make it induced.
    Cascading: some non-induced occurrence has only conflict-edge chords;
    that occurrence is returned as the witness.
    """
    validate_spec(spec)
    if spec.kind not in (PATH, CYCLE):
        raise InvalidSpecError(f"unsupported kind {spec.kind!r}")
    base = replace(spec, induced=True)
    some = next(_noninduced_walks(g, base, None), None)
    if some is None:
        return CascadeStatus(STRICTLY_NON_CASCADING, None)
    x = conflict_edges(g, base)
    bad = next(_noninduced_walks(g, base, x), None)
    if bad is not None:
        return CascadeStatus(CASCADING, bad)
    return CascadeStatus(NON_CASCADING, some)


# -- fence / clique-star recognition --------------------------------------

BLUE_P3 = "blue-p3"
RED_P3 = "red-p3"
TRIANGLE_BBR = "triangle-blue-blue-red"
TRIANGLE_RRB = "triangle-red-red-blue"
P4_RBR = "p4-red-blue-red"

FORBIDDEN_PATTERNS = (BLUE_P3, RED_P3, TRIANGLE_BBR, TRIANGLE_RRB, P4_RBR)


@dataclass(frozen=True)
class RbFence:
    clique1: tuple[int, ...]  # blue clique containing the smallest vertex
    clique2: tuple[int, ...]
    matching: tuple[Edge, ...]  # the red edges

    kind = "rb-fence"

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.clique1 + self.clique2))


@dataclass(frozen=True)
class RbCliqueStar:
    red_clique: tuple[int, ...]
    blue_cliques: tuple[tuple[int, tuple[int, ...]], ...]  # (center, members incl. center)

    kind = "rb-clique-star"

    @property
    def vertices(self) -> tuple[int, ...]:
        vs = set(self.red_clique)
        for _, members in self.blue_cliques:
            vs.update(members)
        return tuple(sorted(vs))


@dataclass(frozen=True)
class Rejection:
    pattern: str  # one of FORBIDDEN_PATTERNS
    witness: tuple[int, ...]

    kind = "rejection"


@dataclass(frozen=True)
class TDecomposition:
    components: tuple[RbFence | RbCliqueStar | Rejection, ...]

    @property
    def accepts(self) -> bool:
        return all(c.kind != "rejection" for c in self.components)

    @property
    def first_rejection(self) -> Rejection | None:
        for c in self.components:
            if c.kind == "rejection":
                return c
        return None


def forbidden_subgraph_scan(
    g: ColoredGraph, vertices: tuple[int, ...] | None = None
) -> Rejection | None:
    """Search for an induced monochromatic open P3, a bicolored triangle, or
    a red-blue-red P4. This is the witness oracle the structural recognizer
    is tested against.
    """
    vs = vertices if vertices is not None else tuple(range(g.n))
    inside = set(vs)
    # open monochromatic P3s
    for pattern, color in ((BLUE_P3, BLUE), (RED_P3, RED)):
        for y in vs:
            nb = sorted(u for u in g.neighbors(y) if u in inside and g.color_of(y, u) == color)
            for x, z in itertools.combinations(nb, 2):
                if not g.has_edge(x, z):
                    return Rejection(pattern, tuple(sorted((x, y, z))))
    # bicolored triangles
    for x, y, z in itertools.combinations(sorted(vs), 3):
        if g.has_edge(x, y) and g.has_edge(y, z) and g.has_edge(x, z):
            blues = sum(
                1 for a, b in ((x, y), (y, z), (x, z)) if g.color_of(a, b) == BLUE
            )
            if blues == 2:
                return Rejection(TRIANGLE_BBR, (x, y, z))
            if blues == 1:
                return Rejection(TRIANGLE_RRB, (x, y, z))
    # induced red-blue-red P4s
    for v, w in sorted(
        canon(a, b) for (a, b) in g.edge_pairs() if g.color_of(a, b) == BLUE
    ):
        if v not in inside or w not in inside:
            continue
        for a, b in ((v, w), (w, v)):
            for u in sorted(g.color_neighbors(a, RED)):
                if u not in inside or u == b or g.has_edge(u, b):
                    continue
                for x in sorted(g.color_neighbors(b, RED)):
                    if x not in inside or x == a or x == u:
                        continue
                    if g.has_edge(x, a) or g.has_edge(x, u):
                        continue
                    return Rejection(P4_RBR, (u, a, b, x))
    return None


def _monochrome_components(g: ColoredGraph, vs: tuple[int, ...], color: int) -> list[tuple[int, ...]]:
    inside = set(vs)
    seen = set()
    comps = []
    for s in vs:
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y in inside and y not in seen and g.color_of(x, y) == color:
                    seen.add(y)
                    comp.add(y)
                    stack.append(y)
        comps.append(tuple(sorted(comp)))
    return comps


def _is_monochrome_clique(g: ColoredGraph, members: tuple[int, ...], color: int) -> bool:
    for a, b in itertools.combinations(members, 2):
        if not (g.has_edge(a, b) and g.color_of(a, b) == color):
            return False
    return True


def _structural_component(g: ColoredGraph, comp: tuple[int, ...]) -> RbFence | RbCliqueStar | None:
    """Classify one connected component by direct structure checks.

    Independent of forbidden_subgraph_scan; returns None if the component is
    neither a fence nor a clique-star.
    """
    blue_comps = _monochrome_components(g, comp, BLUE)
    red_comps = _monochrome_components(g, comp, RED)
    if any(not _is_monochrome_clique(g, bc, BLUE) for bc in blue_comps):
        return None
    if any(not _is_monochrome_clique(g, rc, RED) for rc in red_comps):
        return None
    red_edges = sorted(
        canon(a, b) for (a, b) in g.edge_pairs()
        if a in set(comp) and b in set(comp) and g.color_of(a, b) == RED
    )

    # fence: two blue cliques of size >= 2, red edges a matching between them
    if len(blue_comps) == 2 and all(len(bc) >= 2 for bc in blue_comps):
        red_deg: dict[int, int] = {}
        for a, b in red_edges:
            red_deg[a] = red_deg.get(a, 0) + 1
            red_deg[b] = red_deg.get(b, 0) + 1
        k1, k2 = sorted(blue_comps)
        in1, in2 = set(k1), set(k2)
        crossing = all(
            (a in in1) != (b in in1) and (a in in1 or a in in2) and (b in in1 or b in in2)
            for a, b in red_edges
        )
        if red_edges and crossing and all(d <= 1 for d in red_deg.values()):
            return RbFence(k1, k2, tuple(red_edges))

    # clique-star: at most one nontrivial red clique; blue cliques hang off it
    big_red = [rc for rc in red_comps if len(rc) >= 2]
    if len(big_red) > 1:
        return None
    if big_red:
        center_set = set(big_red[0])
    elif len(blue_comps) == 1:
        center_set = {blue_comps[0][0]}  # lone blue clique: smallest vertex serves
    else:
        return None  # multiple blue cliques, nothing red to join them
    attached: dict[int, tuple[int, ...]] = {}
    for bc in blue_comps:
        meet = [v for v in bc if v in center_set]
        if len(meet) != 1:
            return None
        attached[meet[0]] = bc
    for c in sorted(center_set):
        attached.setdefault(c, (c,))  # bare red vertices count as size-1 blue cliques
    covered = set(center_set)
    for members in attached.values():
        covered.update(members)
    if covered != set(comp):
        return None
    return RbCliqueStar(
        tuple(sorted(center_set)),
        tuple((c, attached[c]) for c in sorted(attached)),
    )


def recognize_t(g: ColoredGraph) -> TDecomposition:
    """Decompose a bicolored graph into fences and clique-stars per component.

    A component that fits neither shape is reported as a Rejection carrying a
    concrete forbidden induced subgraph found by the independent scan.
    """
    if g.c != 2:
        raise NotBicoloredError(f"expected 2 colors, graph declares {g.c}")
    parts: list[RbFence | RbCliqueStar | Rejection] = []
    for comp in g.connected_components():
        structural = _structural_component(g, comp)
        if structural is not None:
            parts.append(structural)
            continue
        witness = forbidden_subgraph_scan(g, comp)
        if witness is None:
            raise AssertionError(
                f"structural recognizer rejected component {comp} but no forbidden "
                "subgraph exists; recognizer bug"
            )
        parts.append(witness)
    return TDecomposition(tuple(parts))
