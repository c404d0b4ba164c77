from __future__ import annotations

import numpy as np
import pytest

import halinpack as hp
from halinpack import _kernels
from halinpack.colorer import (
    Color,
    ColoringFormatError,
    InvariantViolation,
    NotAOneColorError,
    check_template,
    coloring_as_colors,
    trace_lines,
)

C1, C1P, CA, CB, CC = Color.ONE, Color.ONE_PRIME, Color.TWO_A, Color.TWO_B, Color.TWO_C


# --- colors ---


def test_color_radii_and_tokens():
    assert C1.radius == 1 and C1P.radius == 1
    assert CA.radius == CB.radius == CC.radius == 2
    assert [c.token for c in Color] == ["1", "1p", "2a", "2b", "2c"]
    assert str(C1P) == "1'"


def test_complement_one():
    assert hp.complement_one(C1) is C1P
    assert hp.complement_one(C1P) is C1
    assert hp.complement_one(hp.complement_one(C1)) is C1
    with pytest.raises(NotAOneColorError):
        hp.complement_one(CA)


# --- tree 2-coloring ---


def test_two_color_tree_star(k4):
    phi = hp.two_color_tree(k4, 0)
    assert phi[0] is C1
    assert phi[1] is C1P and phi[2] is C1P and phi[3] is C1P


def test_two_color_tree_caterpillar_mid_root(caterpillar3):
    phi = hp.two_color_tree(caterpillar3, 1)
    assert phi[1] is C1
    assert phi[0] is C1P and phi[2] is C1P
    assert phi[3] is C1 and phi[4] is C1 and phi[6] is C1 and phi[7] is C1
    assert phi[5] is C1P


def test_two_color_tree_every_edge_bichromatic():
    for seed in range(10):
        g = hp.gen_random_halin(hp.GeneratorConfig(target_leaves=3 + 7 * seed, seed=seed))
        phi = hp.two_color_tree(g, g.lowest_internal)
        for u, v in g.tree_edges:
            assert phi[u] is not phi[v]


# --- dispatch and cases ---


def test_scan_rotation_spec_sequence():
    tcol = np.array([1, 0, 1, 1, 1, 0, 1, 1], dtype=np.uint8)
    cycle = np.arange(8, dtype=np.int32)
    all_same, offset = _kernels.active.scan_rotation(tcol, cycle)
    assert not all_same
    assert offset == 1  # working position 1 is old position 2


def test_dispatch_w5_all_same(w5):
    phi = hp.two_color_tree(w5, 0)
    view, recolored = hp.recoloring_dispatch(w5, phi)
    assert view.all_same and view.offset == 0
    assert [recolored[a] for a in w5.cycle] == [C1P, CA, C1P, CB, CC]


def test_dispatch_caterpillar_rotates(caterpillar3):
    phi = hp.two_color_tree(caterpillar3, 0)
    # leaf tree colors are (1', 1', 1, 1', 1'): first change at cycle index 3
    view, recolored = hp.recoloring_dispatch(caterpillar3, phi)
    assert not view.all_same
    assert view.offset == 2
    assert view.order == (5, 6, 7, 3, 4)
    assert [recolored[v] for v in (3, 4, 5, 6, 7)] == [CB, C1P, C1, CA, C1P]


@pytest.mark.parametrize(
    "n,expected",
    [
        (6, [1, 2, 1, 3, 2, 1]),
        (7, [1, 2, 1, 3, 1, 2, 1]),
        (8, [1, 2, 1, 3, 1, 2, 1, 3]),
    ],
)
def test_case1_patterns(n, expected):
    # parents all colored 1 (code 0), so every 1_k is 1' (code 1)
    tcodes = np.zeros(2 * n, dtype=np.uint8)
    par = np.arange(n, 2 * n, dtype=np.int32)  # all distinct, fixes never apply
    work, fix1, fix2 = _kernels.active.recolor_working(False, tcodes, par, 0)
    assert work.tolist() == expected
    assert not fix1 and not fix2


def test_case2_k4_trace(k4):
    phi = hp.two_color_tree(k4, 0)
    view, recolored = hp.recoloring_dispatch(k4, phi)
    assert view.all_same
    assert [recolored[a] for a in k4.cycle] == [CA, C1P, CB]
    assert recolored[0] is C1


def test_case_preconditions(w5):
    phi = hp.two_color_tree(w5, 0)
    view, _ = hp.recoloring_dispatch(w5, phi)
    with pytest.raises(ValueError):
        hp.colorer.case1(w5, view, phi)


# --- case-2 fixes on constructed instances ---


def test_shared_parent_tail_fix(shared_parent_tail_graph):
    run = hp.run_pipeline(shared_parent_tail_graph)
    assert run.all_same
    assert run.fix_shared_parent and not run.fix_separated
    # positions 2 and n-1 now carry 2c, position n carries 2a
    pre = run.working_pre.tolist()
    assert pre[1] == 4 and pre[15] == 4 and pre[16] == 2
    match = check_template(run.working_pre, 17, "case2")
    assert match.matched and match.label == "case2+shared-parent-fix"
    assert hp.verify_packing(
        shared_parent_tail_graph, run.coloring, hp.STANDARD_CLASSES
    ).ok


def test_separated_tail_fix(separated_tail_graph):
    run = hp.run_pipeline(separated_tail_graph)
    assert run.all_same
    assert run.fix_separated and not run.fix_shared_parent
    pre = run.working_pre.tolist()
    assert pre[1] == 4 and pre[21] == 2
    match = check_template(run.working_pre, 22, "case2")
    assert match.matched and match.label == "case2+separated-fix"
    assert hp.verify_packing(separated_tail_graph, run.coloring, hp.STANDARD_CLASSES).ok


# --- conflict resolution ---


def _conflict_setup(n, shared_positions, shared_parent):
    """Standard alternating working colors with chosen positions sharing a parent."""
    tcodes = np.zeros(200, dtype=np.uint8)
    par = np.arange(100, 100 + n, dtype=np.int32)
    for p in shared_positions:
        par[p - 1] = shared_parent
    work, _, _ = _kernels.active.recolor_working(False, tcodes, par, 0)
    return work, par


def test_conflict_recolors_i_when_two_back_not_2c():
    # positions 6 and 10 both 2a under one parent; position 4 is 2b
    work, par = _conflict_setup(12, (6, 10), 7)
    start, members = _kernels.active.group_by_parent(work, par, 0, 200)
    events = _kernels.active.resolve_conflicts(work, par, 0, start, members)
    assert events == [(6, 10, 6)]
    assert work[5] == 4 and work[9] == 2


def test_conflict_recolors_j_when_two_back_is_2c():
    work, par = _conflict_setup(12, (6, 10), 7)
    work[3] = 4  # force 2c two positions before i=6
    start, members = _kernels.active.group_by_parent(work, par, 0, 200)
    events = _kernels.active.resolve_conflicts(work, par, 0, start, members)
    assert events == [(6, 10, 10)]
    assert work[5] == 2 and work[9] == 4


def test_conflict_index_zero_aliases_n():
    # conflict at i=2 looks back at position 0, which is position n
    work, par = _conflict_setup(8, (2, 6), 7)
    work[7] = 4  # a_n is 2c, so a_2 keeps its color and j is recolored
    start, members = _kernels.active.group_by_parent(work, par, 0, 200)
    events = _kernels.active.resolve_conflicts(work, par, 0, start, members)
    assert events == [(2, 6, 6)]
    assert work[1] == 2 and work[5] == 4


def test_conflicts_resolving_api(w5):
    phi = hp.two_color_tree(w5, 0)
    view, recolored = hp.recoloring_dispatch(w5, phi)
    final = hp.conflicts_resolving(w5, view, recolored)
    assert final == recolored  # no equal pair under the hub
    assert hp.two_neighborhoods(w5, final) == {0: (2, 4, 5)}


def test_invariant_violation_raised(w5):
    phi = hp.two_color_tree(w5, 0)
    view, recolored = hp.recoloring_dispatch(w5, phi)
    broken = dict(recolored)
    for a in w5.cycle:
        broken[a] = CA  # five 2-colored children under the hub
    with pytest.raises(InvariantViolation):
        hp.conflicts_resolving(w5, view, broken)


def test_conflicts_fire_somewhere_in_corpus():
    fired = 0
    for seed in range(60):
        g = hp.gen_random_halin(hp.GeneratorConfig(target_leaves=20 + seed, seed=seed))
        run = hp.run_pipeline(g)
        fired += len(run.conflict_events)
        for i, j, rec in run.conflict_events:
            assert rec in (i, j)
            assert i % 2 == 0
            assert run.working_post[rec - 1] == 4
    assert fired > 0


# --- whole pipeline ---


def test_packing_coloring_k4(k4):
    phi = hp.packing_coloring(k4)
    assert phi == {0: C1, 1: CA, 2: C1P, 3: CB}


def test_packing_coloring_w5(w5):
    phi = hp.packing_coloring(w5)
    assert [phi[v] for v in range(6)] == [C1, C1P, CA, C1P, CB, CC]


def test_packing_coloring_rejects_degree_six():
    with pytest.raises(hp.MaxDegreeExceededError):
        hp.packing_coloring(hp.gen_wheel(6))


def test_packing_coloring_deterministic():
    g = hp.gen_random_halin(hp.GeneratorConfig(target_leaves=77, seed=3))
    assert hp.packing_coloring(g) == hp.packing_coloring(g)


def test_final_neighborhood_shape():
    for seed in range(40):
        g = hp.gen_random_halin(hp.GeneratorConfig(target_leaves=10 + 3 * seed, seed=seed))
        phi = hp.packing_coloring(g)
        for members in hp.two_neighborhoods(g, phi).values():
            colors = [phi[a] for a in members]
            assert len(members) <= 3
            assert sum(1 for c in colors if c is CC) <= 1
            if len(members) == 3:
                assert len(set(colors)) == 3


def test_one_colored_cycle_vertices_differ_from_parent():
    for seed in range(20):
        g = hp.gen_random_halin(hp.GeneratorConfig(target_leaves=12 + 5 * seed, seed=seed))
        phi = hp.packing_coloring(g)
        for a, b in g.leaf_parent.items():
            if phi[a].radius == 1:
                assert phi[a] is not phi[b]


# --- templates ---


def test_template_case1_n8():
    work = np.array([1, 2, 1, 3, 1, 2, 1, 3], dtype=np.uint8)
    assert check_template(work, 8, "case1").label == "case1"


def test_template_negative_control():
    work = np.array([1, 2, 1, 3, 1, 2, 1, 2], dtype=np.uint8)
    assert not check_template(work, 8, "case1").matched


def test_template_case2_plain_n9():
    work = np.array([1, 2, 1, 3, 1, 2, 1, 3, 4], dtype=np.uint8)
    assert check_template(work, 9, "case2").label == "case2"


def test_template_rejects_small_n():
    with pytest.raises(ValueError):
        check_template(np.zeros(7, dtype=np.uint8), 7, "case1")
    with pytest.raises(ValueError):
        check_template(np.zeros(8, dtype=np.uint8), 8, "case3")


def test_template_matches_pipeline_outputs():
    for seed in range(120):
        g = hp.gen_random_halin(hp.GeneratorConfig(target_leaves=8 + seed, seed=seed))
        run = hp.run_pipeline(g)
        if g.num_leaves >= 8:
            assert check_template(run.working_pre, g.num_leaves, run.case).matched, seed


def test_template_accepts_color_sequence():
    run = hp.run_pipeline(hp.gen_random_halin(hp.GeneratorConfig(target_leaves=8, seed=1)))
    colors = [hp.Color(["1", "1p", "2a", "2b", "2c"][c]) for c in run.working_pre.tolist()]
    n = len(colors)
    if n >= 8:
        assert check_template(colors, n, run.case).matched


# --- trace ---


def test_trace_lines(w5):
    run = hp.run_pipeline(w5)
    lines = trace_lines(run)
    assert lines[0].startswith("stage tree-coloring root=0")
    assert "all_same=true" in lines[1] and "case=case2" in lines[1]
    assert lines[2] == "stage conflicts-resolving events=0"


# --- coloring text format ---


def test_coloring_text_roundtrip(w5):
    phi = hp.packing_coloring(w5)
    text = hp.coloring_to_text(phi)
    assert text.splitlines()[0] == "COLORING 1"
    parsed = hp.coloring_from_text(text)
    assert coloring_as_colors(parsed) == phi


def test_coloring_text_arbitrary_labels():
    text = hp.coloring_to_text({0: "c1", 1: "c2"})
    assert hp.coloring_from_text(text) == {0: "c1", 1: "c2"}
    with pytest.raises(ColoringFormatError):
        coloring_as_colors({0: "c9"})


@pytest.mark.parametrize(
    "text",
    [
        "",
        "COLORING 2\n0 1\n",
        "COLORING 1\n0 1 extra\n",
        "COLORING 1\n1 1\n0 2a\n",
        "COLORING 1\n0 1\n0 2a\n",
        "COLORING 1\nx 1\n",
    ],
)
def test_coloring_text_malformed(text):
    with pytest.raises(ColoringFormatError):
        hp.coloring_from_text(text)
