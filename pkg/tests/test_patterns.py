from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import canonical_form, naive_occurrences
from ecdel.errors import InvalidSpecError, ResourceLimitError
from ecdel.graph import ColoredGraph
from ecdel.patterns import (
    PatternSpec,
    conflict_edges,
    enumerate_occurrences,
    find_one,
    is_free,
)
from test_graph import random_graphs


def small_specs():
    return st.builds(
        PatternSpec,
        st.sampled_from(["path", "cycle"]),
        st.integers(3, 5),
        st.integers(1, 3),
        st.booleans(),
    ).filter(lambda s: not (s.kind == "cycle" and s.colors > s.length))


@pytest.mark.parametrize(
    "kind,length,colors",
    [("path", 0, 1), ("path", 3, 0), ("cycle", 2, 1), ("cycle", 3, 4), ("blob", 3, 1)],
)
def test_invalid_specs_rejected(kind, length, colors):
    with pytest.raises(InvalidSpecError):
        PatternSpec(kind, length, colors)


def test_fig5_cycle_occurrence(fig5):
    occ = find_one(fig5, PatternSpec("cycle", 4, 2))
    assert occ.vertices == (0, 2, 1, 3)
    assert sorted(set(occ.colors)) == [1, 2]


def test_edgeless_graph_is_free():
    g = ColoredGraph(6, 2, [])
    for spec in (PatternSpec("path", 3, 1), PatternSpec("cycle", 4, 2)):
        assert find_one(g, spec) is None
        assert is_free(g, spec)


def test_find_one_bicolored_p3(bicolored_p3_star):
    occ = find_one(bicolored_p3_star, PatternSpec("path", 3, 2))
    assert occ is not None
    assert occ.is_valid_in(bicolored_p3_star, PatternSpec("path", 3, 2))


def test_mono_p5_has_three_p3(bicolored_p3_star):
    g = ColoredGraph(5, 1, [(i, i + 1, 1) for i in range(4)])
    occs = enumerate_occurrences(g, PatternSpec("path", 3, 1))
    assert [o.vertices for o in occs] == [(0, 1, 2), (1, 2, 3), (2, 3, 4)]


def test_single_color_means_exactly_one():
    # a 2-colored path does not count as 1-colored
    g = ColoredGraph(3, 2, [(0, 1, 1), (1, 2, 2)])
    assert enumerate_occurrences(g, PatternSpec("path", 3, 1)) == []
    assert len(enumerate_occurrences(g, PatternSpec("path", 3, 2))) == 1


@settings(max_examples=120, deadline=None)
@given(random_graphs(max_n=7), small_specs())
def test_enumeration_matches_naive_oracle(g, spec):
    got = enumerate_occurrences(g, spec)
    assert {o.vertices for o in got} == naive_occurrences(g, spec)
    # canonical order, no duplicates, self-verifying occurrences
    assert [o.vertices for o in got] == sorted({o.vertices for o in got})
    for o in got:
        assert o.vertices == canonical_form(o.vertices, o.cyclic)
        assert o.is_valid_in(g, spec)


@settings(max_examples=80, deadline=None)
@given(random_graphs(max_n=7), small_specs())
def test_induced_subset_of_subgraph_mode(g, spec):
    induced = {o.vertices for o in enumerate_occurrences(g, PatternSpec(spec.kind, spec.length, spec.colors, True))}
    loose = {o.vertices for o in enumerate_occurrences(g, PatternSpec(spec.kind, spec.length, spec.colors, False))}
    assert induced <= loose


@settings(max_examples=60, deadline=None)
@given(random_graphs(max_n=7), small_specs(), st.randoms())
def test_subgraph_mode_monotone_under_deletion(g, spec, rng):
    loose = PatternSpec(spec.kind, spec.length, spec.colors, False)
    before = {o.vertices for o in enumerate_occurrences(g, loose)}
    subset = [e for e in g.edge_pairs() if rng.random() < 0.3]
    after = {o.vertices for o in enumerate_occurrences(g.remove_edges(subset), loose)}
    assert after <= before


def test_induced_mode_not_monotone():
    # deleting one edge of a monochromatic K4 surfaces new induced paths
    k4 = ColoredGraph(4, 1, [(a, b, 1) for a, b in itertools.combinations(range(4), 2)])
    spec = PatternSpec("path", 3, 1)
    assert enumerate_occurrences(k4, spec) == []
    assert enumerate_occurrences(k4.remove_edges([(0, 1)]), spec) != []


def test_find_one_is_first_of_enumeration(fig5):
    for spec in (PatternSpec("cycle", 4, 2), PatternSpec("path", 3, 1)):
        occs = enumerate_occurrences(fig5, spec)
        first = find_one(fig5, spec)
        assert first == (occs[0] if occs else None)


def test_conflict_edges_fig5(fig5):
    assert conflict_edges(fig5, PatternSpec("cycle", 4, 2)) == frozenset(fig5.edge_pairs())


def test_conflict_edges_spec_free_graph():
    g = ColoredGraph(3, 1, [(0, 1, 1)])
    assert conflict_edges(g, PatternSpec("path", 3, 1)) == frozenset()


@settings(max_examples=60, deadline=None)
@given(random_graphs(max_n=7), small_specs())
def test_conflict_edges_definitional(g, spec):
    ispec = PatternSpec(spec.kind, spec.length, spec.colors, True)
    union = set()
    for occ in enumerate_occurrences(g, ispec):
        union.update(occ.edge_pairs())
    assert conflict_edges(g, spec) == frozenset(union)


def test_occurrence_cap():
    k5 = ColoredGraph(5, 1, [(a, b, 1) for a, b in itertools.combinations(range(5), 2)])
    with pytest.raises(ResourceLimitError):
        enumerate_occurrences(k5, PatternSpec("path", 3, 1, induced=False), cap=3)
