import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import assert_valid_matching, random_circular_intervals
from pgcover.matching_static import (
    CircularConvexGraph,
    ConvexGraph,
    Matching,
    lb_reduce_first,
    lb_reduce_second,
    max_matching_circular,
    max_matching_convex,
)
from pgcover.oracles import ExplicitBipartiteGraph, max_matching_generic


def explicit(g) -> ExplicitBipartiteGraph:
    return ExplicitBipartiteGraph(
        max(v.id for v in g.vertices) + 1 if g.vertices else 0,
        g.n2,
        tuple((v.id, p) for v in g.vertices for p in g.neighbors(v)),
    )


@pytest.mark.parametrize(
    "n2, intervals, size",
    [(3, [(0, 0), (0, 1), (1, 2)], 3), (2, [(0, 0), (0, 0)], 1), (4, [(0, 1), (0, 1), (0, 1)], 2)],
)
def test_convex_examples(n2, intervals, size):
    g = ConvexGraph.of(n2, intervals)
    m = max_matching_convex(g)
    assert m.size == size == max_matching_generic(explicit(g))
    assert_valid_matching(g, m)


def test_first_reduction():
    g = CircularConvexGraph.of(4, [(1, 2), (3, 1)])
    red = lb_reduce_first(g)
    assert (red.vertices[0].begin, red.vertices[0].end) == (1, 2)
    assert (red.vertices[1].begin, red.vertices[1].end) == (3, 4)
    plain = CircularConvexGraph.of(5, [(0, 3), (2, 2)])
    assert [(v.begin, v.end) for v in lb_reduce_first(plain).vertices] == [(0, 3), (2, 2)]


@pytest.mark.parametrize("matched, expected", [(True, (3, 3)), (False, (0, 1))])
def test_second_reduction(matched, expected):
    g = CircularConvexGraph.of(4, [(3, 1), (1, 2)])
    first = Matching({0: 3} if matched else {})
    red = lb_reduce_second(g, first)
    assert (red.vertices[0].begin, red.vertices[0].end) == expected
    assert (red.vertices[1].begin, red.vertices[1].end) == (1, 2)


@pytest.mark.parametrize(
    "n2, intervals, size",
    [(4, [(3, 1), (0, 0), (1, 2), (2, 3)], 4), (3, [(0, 2)] * 3, 3), (2, [(1, 0)], 1)],
)
def test_circular_examples(n2, intervals, size):
    g = CircularConvexGraph.of(n2, intervals)
    m = max_matching_circular(g)
    assert m.size == size == max_matching_generic(explicit(g))
    assert_valid_matching(g, m)


def test_circular_rejects_bad_interval():
    with pytest.raises(ValueError):
        CircularConvexGraph.of(3, [(0, 3)])


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 24), st.integers(0, 30), st.integers(0, 2**32 - 1))
def test_circular_matches_augmenting_paths(n2, count, seed):
    g = CircularConvexGraph.of(n2, random_circular_intervals(random.Random(seed), n2, count))
    m = max_matching_circular(g)
    assert_valid_matching(g, m)
    assert m.size == max_matching_generic(explicit(g))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 20), st.lists(st.tuples(st.integers(0, 19), st.integers(0, 30)), max_size=25))
def test_convex_matches_augmenting_paths(n2, raw):
    g = ConvexGraph.of(n2, [(b % n2, b % n2 + e) for b, e in raw])
    m = max_matching_convex(g)
    assert_valid_matching(g, m)
    assert m.size == max_matching_generic(explicit(g))
