from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import halinpack as hp
from halinpack.graph import (
    ArcContiguityViolation,
    CycleLeafMismatchError,
    DegreeTwoInternalError,
    GraphFormatError,
    IndexOutOfRangeError,
    NotATreeError,
    TooFewLeavesError,
)

from helpers import naive_arc_contiguous


def test_k4_builds():
    g = hp.build_halin(4, [(0, 1), (0, 2), (0, 3)], [1, 2, 3])
    assert g.max_degree == 3
    assert g.num_leaves == 3
    assert g.leaf_parent == {1: 0, 2: 0, 3: 0}


def test_wrong_edge_count():
    with pytest.raises(NotATreeError):
        hp.build_halin(4, [(0, 1), (0, 2)], [1, 2, 3])


def test_duplicate_edge():
    with pytest.raises(NotATreeError):
        hp.build_halin(4, [(0, 1), (1, 0), (0, 2)], [1, 2])


def test_disconnected():
    # 5 vertices, 4 edges, but one is a duplicate pair forming a cycle
    with pytest.raises(NotATreeError):
        hp.build_halin(5, [(0, 1), (1, 2), (2, 0), (3, 4)], [3, 4])


def test_degree_two_internal():
    # internal path 0-1 where 1 has exactly one leaf child
    edges = [(0, 1), (0, 2), (0, 3), (1, 4)]
    with pytest.raises(DegreeTwoInternalError):
        hp.build_halin(5, edges, [2, 3, 4])


def test_cycle_leaf_mismatch():
    with pytest.raises(CycleLeafMismatchError):
        hp.build_halin(4, [(0, 1), (0, 2), (0, 3)], [1, 2, 0])
    with pytest.raises(CycleLeafMismatchError):
        hp.build_halin(4, [(0, 1), (0, 2), (0, 3)], [1, 2, 2])


def test_too_few_leaves():
    with pytest.raises(TooFewLeavesError):
        hp.build_halin(3, [(0, 1), (0, 2)], [1, 2])


def test_arc_contiguity_violation():
    # root 0 with internal children 1, 2; leaves 3,4 under 1 and 5,6 under 2.
    # Interleaved cycle order cannot come from a planar embedding.
    edges = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]
    with pytest.raises(ArcContiguityViolation):
        hp.build_halin(7, edges, [3, 5, 4, 6])
    # the non-interleaved order is fine apart from the degree-2 root
    with pytest.raises(DegreeTwoInternalError):
        hp.build_halin(7, edges, [3, 4, 5, 6])


def test_arc_contiguity_wrapping_order():
    # same tree, cycle rotated so subtree leaves wrap around the ends
    edges = [(0, 1), (0, 2), (0, 7), (1, 3), (1, 4), (2, 5), (2, 6)]
    g = hp.build_halin(8, edges, [4, 5, 6, 7, 3])
    assert g.num_leaves == 5


def test_contiguity_agrees_with_enumeration():
    edges = [(0, 1), (0, 2), (0, 7), (1, 3), (1, 4), (2, 5), (2, 6)]
    leaves = [3, 4, 5, 6, 7]
    accepted = 0
    for perm in itertools.permutations(leaves):
        expected = naive_arc_contiguous(8, edges, list(perm))
        try:
            hp.build_halin(8, edges, list(perm))
            actual = True
        except ArcContiguityViolation:
            actual = False
        assert actual == expected, perm
        accepted += actual
    assert 0 < accepted < 120


def test_distance_identity_and_k4(k4):
    assert hp.distance(k4, 2, 2) == 0
    for u, v in itertools.combinations(range(4), 2):
        assert hp.distance(k4, u, v) == 1


def test_distance_w5(w5):
    # rim vertices two apart reach each other via the hub or one rim step
    assert hp.distance(w5, 1, 3) == 2
    assert hp.distance(w5, 1, 2) == 1
    assert hp.distance(w5, 0, 4) == 1


@given(st.integers(min_value=0, max_value=2**63 - 1))
@settings(max_examples=25, deadline=None)
def test_distance_is_a_metric(seed):
    g = hp.gen_random_halin(hp.GeneratorConfig(target_leaves=3 + seed % 10, seed=seed))
    assert g.n_total <= 30
    d = hp.all_pairs_distances(g)
    n = g.n_total
    assert (d == d.T).all()
    assert (d.diagonal() == 0).all()
    for i, j, k in itertools.product(range(n), repeat=3):
        assert d[i][k] <= d[i][j] + d[j][k]


def test_cycle_vertex_degree_is_three():
    g = hp.gen_random_halin(hp.GeneratorConfig(target_leaves=40, seed=7))
    for a in g.cycle:
        assert len(g.neighbors(a)) == 3
    internal_max = max(
        len(g.tree_neighbors(v)) for v in range(g.n_total) if v not in g.leaf_parent
    )
    assert g.max_degree == max(3, internal_max)


def test_cycle_successor_predecessor(w5):
    assert hp.cycle_successor(w5, 5) == 1
    assert hp.cycle_predecessor(w5, 2) == 1
    assert hp.cycle_predecessor(w5, hp.cycle_predecessor(w5, 2)) == 5
    with pytest.raises(IndexOutOfRangeError):
        hp.cycle_successor(w5, 0)
    with pytest.raises(IndexOutOfRangeError):
        hp.cycle_predecessor(w5, 6)


def test_graph_immutable(k4):
    with pytest.raises(AttributeError):
        k4.n_total = 7


# --- text format ---


def test_text_roundtrip(w5):
    text = hp.graph_to_text(w5)
    g = hp.graph_from_text(text)
    assert g.tree_edges == w5.tree_edges
    assert g.cycle == w5.cycle
    assert hp.graph_to_text(g) == text


def test_text_comments_and_blanks():
    text = "# wheel\nHALIN 1\n\nVERTICES 4  # four vertices\nTREE 0 1\nTREE 0 2\nTREE 0 3\nCYCLE 1 2 3\n"
    g = hp.graph_from_text(text)
    assert g.num_leaves == 3


@pytest.mark.parametrize(
    "text",
    [
        "",
        "HALIN 2\nVERTICES 4\nTREE 0 1\nTREE 0 2\nTREE 0 3\nCYCLE 1 2 3\n",
        "VERTICES 4\nTREE 0 1\nTREE 0 2\nTREE 0 3\nCYCLE 1 2 3\n",
        "HALIN 1\nVERTICES 4\nTREE 0 1 9\nTREE 0 2\nTREE 0 3\nCYCLE 1 2 3\n",
        "HALIN 1\nVERTICES 4\nTREE 0 1\nTREE 0 2\nTREE 0 3\nCYCLE 1 2 3\nCYCLE 1 2 3\n",
        "HALIN 1\nVERTICES 4\nTREE 0 1\nTREE 0 2\nCYCLE 1 2 3\nTREE 0 3\n",
        "HALIN 1\nVERTICES 4\nEDGE 0 1\nTREE 0 2\nTREE 0 3\nCYCLE 1 2 3\n",
        "HALIN 1\nVERTICES 4\nTREE 0 x\nTREE 0 2\nTREE 0 3\nCYCLE 1 2 3\n",
        "HALIN 1\nVERTICES 4\nTREE 0 1\nTREE 0 2\nTREE 0 3\n",
    ],
)
def test_text_malformed(text):
    with pytest.raises(GraphFormatError):
        hp.graph_from_text(text)


def test_text_duplicate_edge_rejected():
    text = "HALIN 1\nVERTICES 4\nTREE 0 1\nTREE 1 0\nTREE 0 2\nCYCLE 1 2\n"
    with pytest.raises(hp.HalinGraphError):
        hp.graph_from_text(text)
