from __future__ import annotations

import pytest

import halinpack as hp


@pytest.fixture
def k4() -> hp.HalinGraph:
    return hp.gen_wheel(3)


@pytest.fixture
def w5() -> hp.HalinGraph:
    return hp.gen_wheel(5)


@pytest.fixture
def caterpillar3() -> hp.HalinGraph:
    # internals 0-1-2; leaves 3,4 under 0; 5 under 1; 6,7 under 2
    return hp.gen_cubic_caterpillar(3)


def _shared_parent_tail_graph() -> hp.HalinGraph:
    # 17 leaves, all at odd depth, root 0 adjacent to cycle positions 8, 16, 17.
    # Exercises the case-2 fix that fires when the last two cycle vertices and
    # a third one share a parent and carry 2b 2b 2c.
    edges = [
        (0, 1), (0, 14), (0, 4), (0, 22), (0, 23),
        (1, 2), (1, 3),
        (2, 7), (2, 8), (2, 9),
        (3, 10), (3, 11), (3, 12), (3, 13),
        (4, 5), (4, 6),
        (5, 15), (5, 16), (5, 17),
        (6, 18), (6, 19), (6, 20), (6, 21),
    ]
    return hp.build_halin(24, edges, list(range(7, 24)))


def _separated_tail_graph() -> hp.HalinGraph:
    # 22 leaves, all at odd depth; the last cycle vertex's parent (vertex 8)
    # sees no 2a/2b neighbor while the second position's parent (the root)
    # also owns the 2a-colored position 14.  Exercises the other case-2 fix.
    edges = [
        (0, 9), (0, 10), (0, 1), (0, 22), (0, 5),
        (1, 2), (1, 3), (1, 4),
        (2, 11), (2, 12), (2, 13), (2, 14),
        (3, 15), (3, 16), (3, 17), (3, 18),
        (4, 19), (4, 20), (4, 21),
        (5, 6), (5, 7), (5, 8),
        (6, 23), (6, 24), (6, 25), (6, 26),
        (7, 27), (7, 28),
        (8, 29), (8, 30),
    ]
    return hp.build_halin(31, edges, list(range(9, 31)))


@pytest.fixture
def shared_parent_tail_graph() -> hp.HalinGraph:
    return _shared_parent_tail_graph()


@pytest.fixture
def separated_tail_graph() -> hp.HalinGraph:
    return _separated_tail_graph()
