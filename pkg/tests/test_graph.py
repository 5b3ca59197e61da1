from __future__ import annotations

import itertools
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from ecdel.errors import (
    ColorOutOfRangeError,
    DuplicateEdgeError,
    EdgeNotPresentError,
    LoopEdgeError,
    MalformedHeaderError,
    VertexOutOfRangeError,
)
from ecdel.graph import (
    ColoredGraph,
    parse_graph,
    serialize_graph,
    structural_stats,
)
from ecdel.patterns import PatternSpec, find_one


def random_graphs(max_n=8, max_c=3):
    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_n))
        c = draw(st.integers(1, max_c))
        pairs = list(itertools.combinations(range(n), 2))
        chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
        colors = draw(st.lists(st.integers(1, c), min_size=len(chosen), max_size=len(chosen)))
        return ColoredGraph(n, c, [(u, v, col) for (u, v), col in zip(chosen, colors)])

    return build()


# -- parsing ---------------------------------------------------------------


def test_parse_minimal():
    g = parse_graph("p ecg 2 1 1\ne 1 2 1")
    assert (g.n, g.m, g.c) == (2, 1, 1)
    assert g.edges() == [(0, 1, 1)]


def test_parse_fig5(fig5):
    assert (fig5.n, fig5.m, fig5.c) == (4, 4, 2)
    assert fig5.color_of(0, 2) == 1 and fig5.color_of(1, 2) == 1
    assert fig5.color_of(0, 3) == 2 and fig5.color_of(1, 3) == 2


def test_parse_accepts_comments_and_bytes():
    g = parse_graph(b"c hello\np ecg 2 1 1\nc mid\ne 1 2 1\n")
    assert g.m == 1


@pytest.mark.parametrize(
    "text,err,line",
    [
        ("p ecg 2 2 1\ne 1 2 1\ne 2 1 1", DuplicateEdgeError, 3),
        ("p ecg 2 1 1\ne 1 1 1", LoopEdgeError, 2),
        ("p ecg 2 1 1\ne 1 2 9", ColorOutOfRangeError, 2),
        ("p ecg 2 1 1\ne 1 3 1", VertexOutOfRangeError, 2),
        ("p ecg 2 1 1\ne 0 2 1", VertexOutOfRangeError, 2),
        ("p wrong 2 1 1\ne 1 2 1", MalformedHeaderError, 1),
        ("e 1 2 1", MalformedHeaderError, 1),
        ("p ecg 2 2 1\ne 1 2 1", MalformedHeaderError, 1),
        ("p ecg 2 1 1\np ecg 2 1 1\ne 1 2 1", MalformedHeaderError, 2),
        ("p ecg 2 1 1\nx 1 2 1", MalformedHeaderError, 2),
    ],
)
def test_parse_errors_carry_line(text, err, line):
    with pytest.raises(err) as exc:
        parse_graph(text)
    assert exc.value.line == line


def test_parse_missing_header():
    with pytest.raises(MalformedHeaderError):
        parse_graph("c nothing here\n")


def test_parse_warns_on_empty_color_class():
    with pytest.warns(UserWarning):
        parse_graph("p ecg 2 1 3\ne 1 2 1")


@settings(max_examples=60)
@given(random_graphs())
def test_serialize_parse_round_trip(g):
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")  # random graphs may leave colors unused
        assert parse_graph(serialize_graph(g)) == g


# -- mutation ----------------------------------------------------------------


def test_remove_edges_identity(fig5):
    assert fig5.remove_edges([]) == fig5


def test_remove_edges_fig5_kills_cycle(fig5):
    got = fig5.remove_edges([(0, 2)])
    assert got.m == 3
    assert find_one(got, PatternSpec("cycle", 4, 2)) is None


def test_remove_all_edges():
    g = ColoredGraph(3, 1, [(0, 1, 1), (1, 2, 1)])
    assert g.remove_edges([(0, 1), (1, 2)]).m == 0


def test_remove_edges_missing(fig5):
    with pytest.raises(EdgeNotPresentError):
        fig5.remove_edges([(0, 1)])


@settings(max_examples=60)
@given(random_graphs(), st.randoms())
def test_remove_then_readd_round_trips(g, rng):
    pairs = g.edge_pairs()
    subset = [e for e in pairs if rng.random() < 0.5]
    removed = g.remove_edges(subset)
    back = removed.add_edges((u, v, g.color_of(u, v)) for u, v in subset)
    assert back == g
    # per-color counts of the parts sum to the whole
    full = g.color_counts()
    part = removed.color_counts()
    cut = {i: 0 for i in range(1, g.c + 1)}
    for u, v in subset:
        cut[g.color_of(u, v)] += 1
    assert {i: part[i] + cut[i] for i in cut} == full


# -- induced subgraphs ---------------------------------------------------------


def test_induced_full_is_identity(fig5):
    sub, originals = fig5.induced_subgraph(range(4))
    assert sub == fig5
    assert originals == (0, 1, 2, 3)


def test_induced_fig5_blue_path(fig5):
    sub, originals = fig5.induced_subgraph([0, 2, 1])
    assert originals == (0, 1, 2)
    assert sub.edges() == [(0, 2, 1), (1, 2, 1)]


def test_induced_rejects_bad_vertex(fig5):
    with pytest.raises(VertexOutOfRangeError):
        fig5.induced_subgraph([0, 9])


@settings(max_examples=60)
@given(random_graphs(), st.randoms())
def test_induced_matches_membership_filter(g, rng):
    keep = sorted(v for v in range(g.n) if rng.random() < 0.5)
    sub, originals = g.induced_subgraph(keep)
    assert list(originals) == keep
    for i, j in itertools.combinations(range(sub.n), 2):
        u, v = originals[i], originals[j]
        assert sub.has_edge(i, j) == g.has_edge(u, v)
        if sub.has_edge(i, j):
            assert sub.color_of(i, j) == g.color_of(u, v)


# -- structural statistics ------------------------------------------------------


def test_stats_edgeless():
    s = structural_stats(ColoredGraph(5, 2, []))
    assert s.max_degree == 0
    assert s.girth == math.inf
    assert s.component_count == 5
    assert s.per_color_is_cluster == {1: True, 2: True}


def test_stats_fig5(fig5):
    s = structural_stats(fig5)
    assert s.max_degree == 2
    assert s.girth == 4
    assert s.component_count == 1
    # each color class is an open 2-edge path, which is not a cluster graph
    assert s.per_color_is_cluster == {1: False, 2: False}


def test_stats_monochromatic_triangle():
    s = structural_stats(ColoredGraph(3, 1, [(0, 1, 1), (1, 2, 1), (0, 2, 1)]))
    assert s.girth == 3
    assert s.per_color_is_cluster == {1: True}


def test_girth_of_long_cycle():
    n = 9
    g = ColoredGraph(n, 1, [(i, (i + 1) % n, 1) for i in range(n)])
    assert structural_stats(g).girth == 9


@settings(max_examples=40)
@given(random_graphs(max_n=7))
def test_girth_matches_exhaustive(g):
    best = math.inf
    for size in range(3, g.n + 1):
        for cycle in itertools.permutations(range(g.n), size):
            if cycle[0] != min(cycle):
                continue
            pairs = [(cycle[i], cycle[(i + 1) % size]) for i in range(size)]
            if all(g.has_edge(u, v) for u, v in pairs):
                best = min(best, size)
        if best < math.inf:
            break
    assert structural_stats(g).girth == best


@settings(max_examples=40)
@given(random_graphs())
def test_adjacency_consistent_with_edge_set(g):
    rebuilt = ColoredGraph(g.n, g.c, g.edges())
    assert rebuilt == g
    for v in range(g.n):
        for u in rebuilt.neighbors(v):
            assert rebuilt.color_of(v, u) == g.color_of(v, u)
