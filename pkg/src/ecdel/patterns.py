"""Detection and enumeration of paths and cycles with an exact color count.

An occurrence of `PatternSpec(kind, length, colors)` is a path (cycle) on
`length` vertices whose edges use exactly `colors` distinct colors. In
induced mode the vertex set must carry no further edges (no chords).

Occurrences are produced in a canonical order so that detection and
enumeration are deterministic: paths are oriented with the smaller endpoint
first; cycles start at their smallest vertex with the smaller of the two
neighbors second. The generator below emits canonical forms in increasing
lexicographic order of the vertex sequence.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterator

from .errors import InvalidSpecError, ResourceLimitError
from .graph import ColoredGraph, Edge, canon

PATH = "path"
CYCLE = "cycle"

DEFAULT_OCCURRENCE_CAP = 10_000_000


@dataclass(frozen=True)
class PatternSpec:
    kind: str  # "path" | "cycle"
    length: int
    colors: int
    induced: bool = True

    def __post_init__(self):
        validate_spec(self)

    @property
    def edge_count(self) -> int:
        return self.length if self.kind == CYCLE else self.length - 1

    def describe(self) -> str:
        mode = "induced" if self.induced else "subgraph"
        return f"{self.colors}-colored {self.kind} on {self.length} vertices ({mode})"


def validate_spec(spec: PatternSpec) -> None:
    if spec.kind not in (PATH, CYCLE):
        raise InvalidSpecError(f"unknown pattern kind {spec.kind!r}")
    if spec.colors < 1:
        raise InvalidSpecError("color count must be at least 1")
    if spec.kind == PATH:
        if spec.length < 1:
            raise InvalidSpecError("path length must be at least 1")
    else:
        if spec.length < 3:
            raise InvalidSpecError("cycles need at least 3 vertices")
        if spec.colors > spec.length:
            raise InvalidSpecError(
                f"a cycle on {spec.length} vertices has only {spec.length} edges"
            )


@dataclass(frozen=True)
class Occurrence:
    """One pattern occurrence: a vertex walk plus the edge colors along it.

    For cycles the color tuple has the same length as the vertex tuple and
    ends with the closing edge's color.
    """

    vertices: tuple[int, ...]
    colors: tuple[int, ...]
    cyclic: bool = False

    def edge_pairs(self) -> tuple[Edge, ...]:
        vs = self.vertices
        pairs = [canon(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]
        if self.cyclic:
            pairs.append(canon(vs[-1], vs[0]))
        return tuple(pairs)

    def chords(self, g: ColoredGraph) -> tuple[Edge, ...]:
        """Edges of g between occurrence vertices that are not walk edges."""
        walk = set(self.edge_pairs())
        vs = self.vertices
        out = []
        for i in range(len(vs)):
            for j in range(i + 1, len(vs)):
                e = canon(vs[i], vs[j])
                if e not in walk and g.has_edge(*e):
                    out.append(e)
        return tuple(sorted(out))

    def is_valid_in(self, g: ColoredGraph, spec: PatternSpec) -> bool:
        """Re-verify this occurrence against g by direct adjacency lookups."""
        vs = self.vertices
        if len(vs) != spec.length or len(set(vs)) != spec.length:
            return False
        if self.cyclic != (spec.kind == CYCLE):
            return False
        cols = []
        for i in range(len(vs) - 1):
            if not g.has_edge(vs[i], vs[i + 1]):
                return False
            cols.append(g.color_of(vs[i], vs[i + 1]))
        if self.cyclic:
            if not g.has_edge(vs[-1], vs[0]):
                return False
            cols.append(g.color_of(vs[-1], vs[0]))
        if tuple(cols) != self.colors or len(set(cols)) != spec.colors:
            return False
        if spec.induced and self.chords(g):
            return False
        return True


def _walk(g: ColoredGraph, spec: PatternSpec) -> Iterator[Occurrence]:
    """Yield canonical occurrences in lexicographic vertex-sequence order."""
    L = spec.length
    want = spec.colors
    cyclic = spec.kind == CYCLE
    induced = spec.induced
    total_edges = L if cyclic else L - 1
    if total_edges < want or (L == 1 and want > 0):
        return
    adj = g._adj
    nbrs = g._nbrs
    seq = [0] * L
    cols = [0] * L  # cols[i] = color of edge seq[i-1]--seq[i]; cols[0] unused for paths

    def extend(i: int, used: int, distinct: int) -> Iterator[Occurrence]:
        last = seq[i - 1]
        start = seq[0]
        closing = cyclic and i == L - 1
        for v in nbrs[last]:
            if cyclic and v <= start:
                continue
            col = adj[last][v]
            bit = 1 << col
            ndistinct = distinct + (0 if used & bit else 1)
            if ndistinct > want:
                continue
            # edges still to be placed after this one (incl. the closing edge)
            if ndistinct + (total_edges - i) < want:
                continue
            # distinctness and (in induced mode) chord checks
            ok = True
            row = adj[v]
            for j in range(i):
                w = seq[j]
                if w == v:
                    ok = False
                    break
                if induced and j < i - 1 and w in row:
                    if not (closing and j == 0):
                        ok = False
                        break
            if not ok:
                continue
            if closing:
                if start not in row:
                    continue
                closecol = row[start]
                cbit = 1 << closecol
                fdistinct = ndistinct + (0 if (used | bit) & cbit else 1)
                if fdistinct != want:
                    continue
                if seq[1] > v:  # reflection canonicalization
                    continue
                seq[i] = v
                cols[i] = col
                yield Occurrence(tuple(seq), tuple(cols[1:] + [closecol]), cyclic=True)
                continue
            seq[i] = v
            cols[i] = col
            if i + 1 == L:
                if ndistinct == want and start < v:
                    yield Occurrence(tuple(seq), tuple(cols[1:]), cyclic=False)
            else:
                yield from extend(i + 1, used | bit, ndistinct)

    if L == 1:
        return  # no edges, so no positive color count can match
    for s in range(g.n):
        seq[0] = s
        yield from extend(1, 0, 0)


def occurrences(g: ColoredGraph, spec: PatternSpec) -> Iterator[Occurrence]:
    """Lazy canonical-order iterator over all occurrences."""
    validate_spec(spec)
    return _walk(g, spec)


def find_one(g: ColoredGraph, spec: PatternSpec) -> Occurrence | None:
    """The canonically smallest occurrence, or None iff g is spec-free."""
    return next(occurrences(g, spec), None)


def is_free(g: ColoredGraph, spec: PatternSpec) -> bool:
    return find_one(g, spec) is None


def enumerate_occurrences(
    g: ColoredGraph, spec: PatternSpec, cap: int = DEFAULT_OCCURRENCE_CAP
) -> list[Occurrence]:
    """All occurrences, deduplicated by canonical form, in canonical order."""
    out = []
    for occ in occurrences(g, spec):
        out.append(occ)
        if len(out) > cap:
            raise ResourceLimitError(
                f"more than {cap} occurrences of {spec.describe()}; raise the cap to continue"
            )
    return out


def conflict_edges(g: ColoredGraph, spec: PatternSpec, cap: int = DEFAULT_OCCURRENCE_CAP) -> frozenset[Edge]:
    """Union of the edge sets of all induced occurrences.

    Edges outside this set are conflict-free: no induced occurrence uses them.
    """
    ispec = replace(spec, induced=True)
    hit: set[Edge] = set()
    for occ in enumerate_occurrences(g, ispec, cap=cap):
        hit.update(occ.edge_pairs())
    return frozenset(hit)


def format_occurrence(occ: Occurrence) -> str:
    """1-indexed vertex sequence, whitespace separated (CLI output format)."""
    return " ".join(str(v + 1) for v in occ.vertices)
