from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import naive_occurrences
from ecdel.classify import (
    CASCADING,
    NON_CASCADING,
    STRICTLY_NON_CASCADING,
    cascade_status,
    colored_classes,
    forbidden_subgraph_scan,
    is_color_diverse,
    pattern_colorings,
    qualifying_colors,
    recognize_t,
    same_class,
    spec_is_color_diverse,
)
from ecdel.errors import NotBicoloredError
from ecdel.graph import ColoredGraph, canon
from ecdel.patterns import PatternSpec, enumerate_occurrences
from test_graph import random_graphs
from test_patterns import small_specs


# -- colored neighborhood classes -------------------------------------------


def test_edgeless_graph_is_one_class():
    part = colored_classes(ColoredGraph(5, 2, []))
    assert part.gamma == 1
    assert part.classes[0].vertices == (0, 1, 2, 3, 4)
    assert not part.classes[0].is_clique


def test_fig5_classes(fig5):
    part = colored_classes(fig5)
    assert [k.vertices for k in part.classes] == [(0, 1), (2,), (3,)]
    assert part.gamma == 3


def test_monochromatic_clique_is_one_clique_class():
    g = ColoredGraph(3, 1, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    part = colored_classes(g)
    assert part.gamma == 1
    assert part.classes[0].clique_color == 1


@settings(max_examples=50, deadline=None)
@given(random_graphs(max_n=7))
def test_same_class_is_equivalence(g):
    verts = range(g.n)
    for u in verts:
        assert same_class(g, u, u)
    for u, v in itertools.combinations(verts, 2):
        assert same_class(g, u, v) == same_class(g, v, u)
    for u, v, w in itertools.permutations(verts, 3):
        if same_class(g, u, v) and same_class(g, v, w):
            assert same_class(g, u, w)


@settings(max_examples=50, deadline=None)
@given(random_graphs(max_n=8))
def test_classes_are_independent_or_monochromatic_cliques(g):
    for k in colored_classes(g).classes:
        pairs = list(itertools.combinations(k.vertices, 2))
        if k.is_clique:
            assert all(
                g.has_edge(u, v) and g.color_of(u, v) == k.clique_color for u, v in pairs
            )
        else:
            assert not any(g.has_edge(u, v) for u, v in pairs)


@settings(max_examples=40, deadline=None)
@given(random_graphs(max_n=8))
def test_adjacent_pair_qualifies_under_at_most_one_color(g):
    # the closed-neighborhood color of a same-class adjacent pair is unique
    for u, v in g.edge_pairs():
        assert len(qualifying_colors(g, u, v)) <= 1


@settings(max_examples=40, deadline=None)
@given(random_graphs(max_n=7))
def test_class_contraction_gives_singletons(g):
    part = colored_classes(g)
    reps = {k.vertices[0]: i for i, k in enumerate(part.classes)}
    index = {}
    for i, k in enumerate(part.classes):
        for v in k.vertices:
            index[v] = i
    edges = {}
    for u, v in g.edge_pairs():
        a, b = index[u], index[v]
        if a != b:
            edges[canon(a, b)] = g.color_of(u, v)
    quotient = ColoredGraph(part.gamma, g.c, [(u, v, col) for (u, v), col in edges.items()])
    assert colored_classes(quotient).gamma == part.gamma


# -- color diversity -----------------------------------------------------------


def test_fig5_not_color_diverse(fig5):
    assert not is_color_diverse(fig5)


def test_monochromatic_p3_not_color_diverse():
    assert not is_color_diverse(ColoredGraph(3, 1, [(0, 1, 1), (1, 2, 1)]))


@pytest.mark.parametrize("length", [4, 5])
def test_all_path_colorings_color_diverse(length):
    for c in range(1, length):
        for f in pattern_colorings("path", length, c):
            assert is_color_diverse(f)


@pytest.mark.parametrize(
    "kind,length,colors,expected",
    [
        ("path", 3, 2, True),
        ("cycle", 4, 2, False),
        ("cycle", 5, 2, True),
        ("path", 3, 1, False),
        ("path", 4, 1, True),
        ("cycle", 3, 3, True),
        ("cycle", 4, 3, True),
    ],
)
def test_spec_color_diversity_closed_form(kind, length, colors, expected):
    assert spec_is_color_diverse(PatternSpec(kind, length, colors)) == expected


def test_spec_color_diversity_exhaustive_cross_validation():
    for kind, lmin in (("path", 2), ("cycle", 3)):
        for length in range(lmin, 7):
            cmax = length if kind == "cycle" else length - 1
            for colors in range(1, cmax + 1):
                every = all(
                    is_color_diverse(f) for f in pattern_colorings(kind, length, colors)
                )
                assert every == spec_is_color_diverse(PatternSpec(kind, length, colors)), (
                    kind,
                    length,
                    colors,
                )


# -- cascade status --------------------------------------------------------------


def definitional_non_cascading(g: ColoredGraph, spec: PatternSpec) -> bool:
    """Exponential check straight from the definition: no subset of conflict
    edges may turn a non-induced occurrence into an induced one."""
    from ecdel.patterns import conflict_edges

    loose = PatternSpec(spec.kind, spec.length, spec.colors, False)
    induced = {o.vertices: o for o in enumerate_occurrences(g, PatternSpec(spec.kind, spec.length, spec.colors, True))}
    noninduced = [
        o for o in enumerate_occurrences(g, loose) if o.vertices not in induced or o.chords(g)
    ]
    noninduced = [o for o in noninduced if o.chords(g)]
    x = sorted(conflict_edges(g, spec))
    for r in range(len(x) + 1):
        for sub in itertools.combinations(x, r):
            shrunk = g.remove_edges(sub)
            for occ in noninduced:
                if all(shrunk.has_edge(u, v) for u, v in occ.edge_pairs()) and not occ.chords(shrunk):
                    return False
    return True


def test_cascade_strictly_when_girth_large():
    chain = ColoredGraph(6, 2, [(i, i + 1, 1 + i % 2) for i in range(5)])
    st_ = cascade_status(chain, PatternSpec("path", 4, 2))
    assert st_.status == STRICTLY_NON_CASCADING and st_.witness is None


def test_cascade_mono_k4_matches_definition():
    # no induced occurrence exists, so the conflict-edge set is empty and the
    # definitional check is vacuous: non-cascading, though not strictly
    k4 = ColoredGraph(4, 1, [(a, b, 1) for a, b in itertools.combinations(range(4), 2)])
    spec = PatternSpec("path", 3, 1)
    st_ = cascade_status(k4, spec)
    assert st_.status == NON_CASCADING
    assert definitional_non_cascading(k4, spec)


def test_cascading_example():
    # K4 minus an edge, monochromatic: both induced and non-induced paths,
    # every edge is a conflict edge, so the chordful path cascades
    g = ColoredGraph(4, 1, [(0, 1, 1), (0, 2, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)])
    spec = PatternSpec("path", 3, 1)
    st_ = cascade_status(g, spec)
    assert st_.status == CASCADING
    assert st_.witness is not None and st_.witness.chords(g)
    assert not definitional_non_cascading(g, spec)


@settings(max_examples=60, deadline=None)
@given(random_graphs(max_n=6), small_specs())
def test_cascade_status_matches_definitional_check(g, spec):
    st_ = cascade_status(g, spec)
    loose = PatternSpec(spec.kind, spec.length, spec.colors, False)
    noninduced = [o for o in enumerate_occurrences(g, loose) if o.chords(g)]
    if st_.status == STRICTLY_NON_CASCADING:
        assert not noninduced
    else:
        assert noninduced
        assert (st_.status == NON_CASCADING) == definitional_non_cascading(g, spec)


@settings(max_examples=50, deadline=None)
@given(random_graphs(max_n=7), small_specs())
def test_strictly_non_cascading_enumerations_coincide(g, spec):
    if cascade_status(g, spec).status == STRICTLY_NON_CASCADING:
        induced = {o.vertices for o in enumerate_occurrences(g, PatternSpec(spec.kind, spec.length, spec.colors, True))}
        loose = {o.vertices for o in enumerate_occurrences(g, PatternSpec(spec.kind, spec.length, spec.colors, False))}
        assert induced == loose


# -- fence / clique-star recognition ------------------------------------------


def test_fence_recognized(fence_k3_k4):
    dec = recognize_t(fence_k3_k4)
    assert dec.accepts
    comp = dec.components[0]
    assert comp.kind == "rb-fence"
    assert comp.clique1 == (0, 1, 2)
    assert comp.clique2 == (3, 4, 5, 6)
    assert comp.matching == ((0, 4), (2, 3))


def test_red_blue_red_path_rejected():
    g = ColoredGraph(4, 2, [(0, 1, 2), (1, 2, 1), (2, 3, 2)])
    dec = recognize_t(g)
    assert not dec.accepts
    assert dec.components[0].pattern == "p4-red-blue-red"


def test_blue_clique_degenerate_star():
    g = ColoredGraph(3, 2, [(0, 1, 1), (0, 2, 1), (1, 2, 1)])
    comp = recognize_t(g).components[0]
    assert comp.kind == "rb-clique-star"
    assert comp.red_clique == (0,)
    assert comp.blue_cliques == ((0, (0, 1, 2)),)


def test_fence_priority_over_star():
    g = ColoredGraph(4, 2, [(0, 1, 1), (2, 3, 1), (1, 2, 2)])
    assert recognize_t(g).components[0].kind == "rb-fence"


def test_isolated_vertex_is_star():
    comp = recognize_t(ColoredGraph(1, 2, [])).components[0]
    assert comp.kind == "rb-clique-star"


def test_recognize_t_requires_two_colors(fig5):
    with pytest.raises(NotBicoloredError):
        recognize_t(ColoredGraph(3, 1, [(0, 1, 1)]))


def test_forbidden_scan_finds_each_pattern():
    cases = {
        "blue-p3": ColoredGraph(3, 2, [(0, 1, 1), (1, 2, 1)]),
        "red-p3": ColoredGraph(3, 2, [(0, 1, 2), (1, 2, 2)]),
        "triangle-blue-blue-red": ColoredGraph(3, 2, [(0, 1, 1), (1, 2, 1), (0, 2, 2)]),
        "triangle-red-red-blue": ColoredGraph(3, 2, [(0, 1, 2), (1, 2, 2), (0, 2, 1)]),
        "p4-red-blue-red": ColoredGraph(4, 2, [(0, 1, 2), (1, 2, 1), (2, 3, 2)]),
    }
    for pattern, g in cases.items():
        rej = forbidden_subgraph_scan(g)
        assert rej is not None and rej.pattern == pattern


@settings(max_examples=200, deadline=None)
@given(random_graphs(max_n=7, max_c=2))
def test_structural_recognizer_agrees_with_scan(g):
    if g.c != 2:
        g = ColoredGraph(g.n, 2, g.edges())
    dec = recognize_t(g)
    assert dec.accepts == (forbidden_subgraph_scan(g) is None)
