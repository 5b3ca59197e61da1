from __future__ import annotations

import itertools

import pytest

from ecdel.graph import ColoredGraph, canon, parse_graph
from ecdel.patterns import CYCLE, Occurrence, PatternSpec

FIG5_TEXT = "p ecg 4 4 2\ne 1 3 1\ne 2 3 1\ne 1 4 2\ne 2 4 2\n"


@pytest.fixture
def fig5() -> ColoredGraph:
    # 4-cycle u-w-v-x with same-colored edges meeting at w and at x;
    # u and v share all colored neighborhoods (u=0, v=1, w=2, x=3)
    return parse_graph(FIG5_TEXT)


@pytest.fixture
def bicolored_p3_star() -> ColoredGraph:
    # red triangle {3, 4, 2} with blue pendant edges 2-0 and 2-1:
    # the source-instance shape used for the lifting construction
    return ColoredGraph(5, 2, [(3, 4, 2), (2, 3, 2), (2, 4, 2), (0, 2, 1), (1, 2, 1)])


@pytest.fixture
def fence_k3_k4() -> ColoredGraph:
    # blue triangle {0,1,2} and blue 4-clique {3,4,5,6} joined by 2 red edges
    edges = [(a, b, 1) for a, b in itertools.combinations(range(3), 2)]
    edges += [(a, b, 1) for a, b in itertools.combinations(range(3, 7), 2)]
    edges += [(2, 3, 2), (0, 4, 2)]
    return ColoredGraph(7, 2, edges)


def naive_occurrences(g: ColoredGraph, spec: PatternSpec) -> set[tuple[int, ...]]:
    """Definition-level oracle: try every vertex sequence. Exponential."""
    found: set[tuple[int, ...]] = set()
    cyclic = spec.kind == CYCLE
    for seq in itertools.permutations(range(g.n), spec.length):
        pairs = [(seq[i], seq[i + 1]) for i in range(len(seq) - 1)]
        if cyclic:
            pairs.append((seq[-1], seq[0]))
        if not all(g.has_edge(u, v) for u, v in pairs):
            continue
        colors = {g.color_of(u, v) for u, v in pairs}
        if len(colors) != spec.colors:
            continue
        if spec.induced:
            walk = {canon(u, v) for u, v in pairs}
            if any(
                g.has_edge(a, b) and canon(a, b) not in walk
                for a, b in itertools.combinations(seq, 2)
            ):
                continue
        found.add(canonical_form(seq, cyclic))
    return found


def canonical_form(seq: tuple[int, ...], cyclic: bool) -> tuple[int, ...]:
    if not cyclic:
        return min(seq, tuple(reversed(seq)))
    rotations = []
    n = len(seq)
    for base in (seq, tuple(reversed(seq))):
        for s in range(n):
            rotations.append(base[s:] + base[:s])
    return min(rotations)
