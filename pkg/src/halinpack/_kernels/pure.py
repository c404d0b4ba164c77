"""Pure-Python kernels for the coloring pipeline and the verifier.

Reference implementation of the hot loops.  The compiled module in
``_native.pyx`` mirrors these functions exactly; both operate on the same
numpy arrays and must produce identical results.

Color codes: 0 = "1", 1 = "1'", 2 = "2a", 3 = "2b", 4 = "2c".  The cycle's
working order is a rotation by ``offset``: working position k (0-based)
reads original cycle position (k + offset) mod n.
"""

from __future__ import annotations

import numpy as np

ONE = 0
ONE_P = 1
TWO_A = 2
TWO_B = 3
TWO_C = 4


def two_color_tree(indptr: np.ndarray, nbrs: np.ndarray, root: int, n_total: int) -> np.ndarray:
    """Proper 2-coloring of a tree by breadth-first parity; root gets code 0."""
    indl = indptr.tolist()
    nbl = nbrs.tolist()
    colors = bytearray(n_total)
    seen = bytearray(n_total)
    seen[root] = 1
    queue = [root]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        child_color = colors[v] ^ 1
        for i in range(indl[v], indl[v + 1]):
            w = nbl[i]
            if not seen[w]:
                seen[w] = 1
                colors[w] = child_color
                queue.append(w)
    return np.frombuffer(bytes(colors), dtype=np.uint8).copy()


def scan_rotation(tcodes: np.ndarray, cycle: np.ndarray) -> tuple[bool, int]:
    """Cyclic-relabeling decision on the tree colors of the cycle vertices.

    Returns (all_same, offset).  When the first and last cycle colors already
    differ no rotation happens; otherwise the offset points at the first
    color change; all_same is True when no change exists at all.
    """
    tl = tcodes.tolist()
    t = [tl[v] for v in cycle.tolist()]
    n = len(t)
    if t[0] != t[n - 1]:
        return False, 0
    for idx in range(1, n):
        if t[idx] != t[idx - 1]:
            return False, idx
    return True, 0


def _rotated_parents(parent_ids: np.ndarray, offset: int) -> list[int]:
    par = parent_ids.tolist()
    return par[offset:] + par[:offset]


def recolor_working(
    case2: bool,
    tcodes: np.ndarray,
    parent_ids: np.ndarray,
    offset: int,
) -> tuple[np.ndarray, bool, bool]:
    """Recolor the working cycle order; returns (colors, fix1, fix2).

    The main loop alternates a 1-color (complementing the tree parent's
    color) with 2a / 2b on a period of four.  The tail depends on n mod 4
    and on which case runs; the two conditional fixes apply only in case 2.
    """
    par = _rotated_parents(parent_ids, offset)
    tl = tcodes.tolist()
    ptc = [tl[p] for p in par]
    n = len(par)
    w = [0] * n
    m = (n // 4) * 4
    for k0 in range(m):
        k = k0 + 1
        if k % 2 == 1:
            w[k0] = 1 - ptc[k0]
        elif k % 4 == 2:
            w[k0] = TWO_A
        else:
            w[k0] = TWO_B
    tail = n - m
    if not case2:
        if tail == 1:
            w[n - 1] = 1 - ptc[n - 1]
        elif tail == 2:
            w[n - 2] = TWO_A
            w[n - 1] = 1 - ptc[n - 1]
        elif tail == 3:
            w[n - 3] = 1 - ptc[n - 3]
            w[n - 2] = TWO_A
            w[n - 1] = 1 - ptc[n - 1]
    else:
        if tail == 1:
            w[n - 1] = TWO_C
        elif tail == 2:
            w[n - 2] = 1 - ptc[n - 2]
            w[n - 1] = TWO_C
        elif tail == 3:
            w[n - 3] = TWO_A
            w[n - 2] = 1 - ptc[n - 2]
            w[n - 1] = TWO_B

    fix1 = False
    fix2 = False
    if case2:
        for i0 in range(n - 2):
            if (
                w[n - 1] == TWO_C
                and w[n - 2] == TWO_B
                and w[i0] == TWO_B
                and par[n - 1] == par[n - 2] == par[i0]
            ):
                w[1] = TWO_C
                w[n - 2] = TWO_C
                w[n - 1] = TWO_A
                fix1 = True
                break
        if w[n - 1] == TWO_C:
            not_separated = True
            for i0 in range(n - 1):
                if (w[i0] == TWO_A or w[i0] == TWO_B) and par[n - 1] == par[i0]:
                    not_separated = False
                    break
            if not_separated:
                for i0 in range(3, n - 1):
                    if w[i0] == TWO_A and par[i0] == par[1]:
                        w[1] = TWO_C
                        w[n - 1] = TWO_A
                        fix2 = True
                        break
    return np.array(w, dtype=np.uint8), fix1, fix2


def group_by_parent(
    work: np.ndarray,
    parent_ids: np.ndarray,
    offset: int,
    n_total: int,
) -> tuple[np.ndarray, np.ndarray]:
    """Group 2-colored working positions by tree parent.

    Returns (start, members): members holds working positions in ascending
    order within each parent's segment members[start[p] : start[p + 1]].
    """
    par_w = np.array(_rotated_parents(parent_ids, offset), dtype=np.int32)
    pos = np.flatnonzero(work >= 2).astype(np.int32)
    pars = par_w[pos]
    counts = np.bincount(pars, minlength=n_total)
    start = np.zeros(n_total + 1, dtype=np.int32)
    np.cumsum(counts, out=start[1:])
    order = np.argsort(pars, kind="stable")
    members = pos[order]
    return start, members


def check_groups_pre(
    work: np.ndarray,
    start: np.ndarray,
    members: np.ndarray,
) -> list[str]:
    """Structural checks on the parent groups before conflict resolution.

    Every group has at most three members; a 3-member group must contain
    two cycle-consecutive positions with different colors.
    """
    n = len(work)
    wl = work.tolist()
    mem = members.tolist()
    st = start
    out: list[str] = []
    for p in np.flatnonzero(np.diff(start) > 2).tolist():
        a, b = int(st[p]), int(st[p + 1])
        cnt = b - a
        if cnt > 3:
            out.append(f"parent {p} has {cnt} two-colored cycle children")
            continue
        m1, m2, m3 = mem[a:b]
        ok = False
        for x, y in ((m1, m2), (m2, m3)):
            if y - x == 1 and wl[x] != wl[y]:
                ok = True
        if m1 == 0 and m3 == n - 1 and wl[m3] != wl[m1]:
            ok = True
        if not ok:
            out.append(
                f"parent {p} group {mem[a:b]} lacks a consecutive pair with distinct colors"
            )
    return out


def resolve_conflicts(
    work: np.ndarray,
    parent_ids: np.ndarray,
    offset: int,
    start: np.ndarray,
    members: np.ndarray,
) -> list[tuple[int, int, int]]:
    """Recolor one vertex of each same-colored 2a/2b pair under a shared parent.

    Scans even working positions ascending; for the first matching partner j
    the position i is recolored to 2c unless the position two before i (index
    0 aliasing n) is already 2c, in which case j is recolored instead.
    Mutates ``work`` in place and returns (i, j, recolored) events, 1-based.
    """
    n = len(work)
    wl = work.tolist()
    par = _rotated_parents(parent_ids, offset)
    st = start.tolist()
    mem = members.tolist()
    events: list[tuple[int, int, int]] = []
    for i0 in range(1, n, 2):
        p = par[i0]
        a, b = st[p], st[p + 1]
        if b - a < 2:
            continue
        for k in range(a, b):
            j0 = mem[k]
            if j0 == i0:
                continue
            if wl[i0] == wl[j0] and wl[i0] != TWO_C:
                prev0 = i0 - 2 if i0 >= 2 else n - 1
                if wl[prev0] != TWO_C:
                    wl[i0] = TWO_C
                    rec = i0
                else:
                    wl[j0] = TWO_C
                    rec = j0
                events.append((i0 + 1, j0 + 1, rec + 1))
                break
    work[:] = wl
    return events


def check_groups_post(
    work: np.ndarray,
    start: np.ndarray,
    members: np.ndarray,
) -> list[str]:
    """Post-resolution checks: no duplicated 2c per group; 3-member groups
    carry three distinct colors."""
    wl = work.tolist()
    mem = members.tolist()
    st = start
    out: list[str] = []
    for p in np.flatnonzero(np.diff(start) > 1).tolist():
        a, b = int(st[p]), int(st[p + 1])
        colors = [wl[x] for x in mem[a:b]]
        if colors.count(TWO_C) > 1:
            out.append(f"parent {p} has two 2c-colored cycle children")
        if b - a == 3 and len(set(colors)) != 3:
            out.append(f"parent {p} group carries repeated colors {colors}")
    return out


def scatter_cycle(
    codes: np.ndarray,
    cycle: np.ndarray,
    offset: int,
    work: np.ndarray,
) -> None:
    """Write working colors back onto original vertex ids, in place."""
    codes[np.roll(cycle, -offset)] = work


def verify_radius(
    indptr: np.ndarray,
    nbrs: np.ndarray,
    labels: np.ndarray,
    radii: np.ndarray,
) -> list[tuple[int, int, int, int]]:
    """All same-class pairs closer than their class radius allows.

    Bounded breadth-first search to depth radii[labels[u]] from every vertex;
    returns (class_index, u, v, dist) tuples with u < v.
    """
    indl = indptr.tolist()
    nbl = nbrs.tolist()
    lab = labels.tolist()
    rad = radii.tolist()
    n_total = len(lab)
    stamp = [-1] * n_total
    dist = [0] * n_total
    out: list[tuple[int, int, int, int]] = []
    for u in range(n_total):
        lu = lab[u]
        s = rad[lu]
        stamp[u] = u
        dist[u] = 0
        queue = [u]
        head = 0
        while head < len(queue):
            x = queue[head]
            head += 1
            dx = dist[x]
            if dx == s:
                continue
            dn = dx + 1
            for i in range(indl[x], indl[x + 1]):
                w = nbl[i]
                if stamp[w] != u:
                    stamp[w] = u
                    dist[w] = dn
                    queue.append(w)
                    if lab[w] == lu and u < w:
                        out.append((lu, u, w, dn))
    return out
