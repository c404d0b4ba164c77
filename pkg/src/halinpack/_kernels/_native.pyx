# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; mirrors ``halinpack._kernels.pure`` function by function.

Both backends take the same numpy arrays and must return identical results;
``tests/test_backends.py`` pins the equivalence.
"""

import numpy as np

from libc.stdint cimport int32_t, uint8_t


cdef enum:
    TWO_A = 2
    TWO_B = 3
    TWO_C = 4


cdef inline Py_ssize_t _wrap(Py_ssize_t k, Py_ssize_t offset, Py_ssize_t n) nogil:
    cdef Py_ssize_t idx = k + offset
    if idx >= n:
        idx -= n
    return idx


def two_color_tree(indptr, nbrs, root, n_total):
    """Proper 2-coloring of a tree by breadth-first parity; root gets code 0."""
    cdef int32_t[::1] indl = indptr
    cdef int32_t[::1] nbl = nbrs
    colors_arr = np.zeros(n_total, dtype=np.uint8)
    seen_arr = np.zeros(n_total, dtype=np.uint8)
    queue_arr = np.empty(n_total, dtype=np.int32)
    cdef uint8_t[::1] colors = colors_arr
    cdef uint8_t[::1] seen = seen_arr
    cdef int32_t[::1] queue = queue_arr
    cdef Py_ssize_t head = 0, tail = 1, v, w, i
    cdef uint8_t child_color
    queue[0] = root
    seen[root] = 1
    while head < tail:
        v = queue[head]
        head += 1
        child_color = colors[v] ^ 1
        for i in range(indl[v], indl[v + 1]):
            w = nbl[i]
            if not seen[w]:
                seen[w] = 1
                colors[w] = child_color
                queue[tail] = w
                tail += 1
    return colors_arr


def scan_rotation(tcodes, cycle):
    """Cyclic-relabeling decision; see the pure twin for the contract."""
    cdef uint8_t[::1] t = tcodes
    cdef int32_t[::1] c = cycle
    cdef Py_ssize_t n = c.shape[0], idx
    if t[c[0]] != t[c[n - 1]]:
        return False, 0
    for idx in range(1, n):
        if t[c[idx]] != t[c[idx - 1]]:
            return False, idx
    return True, 0


def recolor_working(case2, tcodes, parent_ids, offset):
    """Recolor the working cycle order; returns (colors, fix1, fix2)."""
    cdef uint8_t[::1] tl = tcodes
    cdef int32_t[::1] par = parent_ids
    cdef Py_ssize_t n = par.shape[0]
    cdef Py_ssize_t off = offset
    w_arr = np.zeros(n, dtype=np.uint8)
    cdef uint8_t[::1] w = w_arr
    cdef Py_ssize_t m = (n // 4) * 4, k0, k, i0, tail
    cdef bint is2 = bool(case2)
    cdef bint fix1 = False, fix2 = False, not_separated = True

    for k0 in range(m):
        k = k0 + 1
        if k % 2 == 1:
            w[k0] = 1 - tl[par[_wrap(k0, off, n)]]
        elif k % 4 == 2:
            w[k0] = TWO_A
        else:
            w[k0] = TWO_B
    tail = n - m
    if not is2:
        if tail == 1:
            w[n - 1] = 1 - tl[par[_wrap(n - 1, off, n)]]
        elif tail == 2:
            w[n - 2] = TWO_A
            w[n - 1] = 1 - tl[par[_wrap(n - 1, off, n)]]
        elif tail == 3:
            w[n - 3] = 1 - tl[par[_wrap(n - 3, off, n)]]
            w[n - 2] = TWO_A
            w[n - 1] = 1 - tl[par[_wrap(n - 1, off, n)]]
    else:
        if tail == 1:
            w[n - 1] = TWO_C
        elif tail == 2:
            w[n - 2] = 1 - tl[par[_wrap(n - 2, off, n)]]
            w[n - 1] = TWO_C
        elif tail == 3:
            w[n - 3] = TWO_A
            w[n - 2] = 1 - tl[par[_wrap(n - 2, off, n)]]
            w[n - 1] = TWO_B

    if is2:
        for i0 in range(n - 2):
            if (
                w[n - 1] == TWO_C
                and w[n - 2] == TWO_B
                and w[i0] == TWO_B
                and par[_wrap(n - 1, off, n)] == par[_wrap(n - 2, off, n)]
                and par[_wrap(n - 2, off, n)] == par[_wrap(i0, off, n)]
            ):
                w[1] = TWO_C
                w[n - 2] = TWO_C
                w[n - 1] = TWO_A
                fix1 = True
                break
        if w[n - 1] == TWO_C:
            for i0 in range(n - 1):
                if (w[i0] == TWO_A or w[i0] == TWO_B) and par[_wrap(n - 1, off, n)] == par[_wrap(i0, off, n)]:
                    not_separated = False
                    break
            if not_separated:
                for i0 in range(3, n - 1):
                    if w[i0] == TWO_A and par[_wrap(i0, off, n)] == par[_wrap(1, off, n)]:
                        w[1] = TWO_C
                        w[n - 1] = TWO_A
                        fix2 = True
                        break
    return w_arr, bool(fix1), bool(fix2)


def group_by_parent(work, parent_ids, offset, n_total):
    """Group 2-colored working positions by tree parent (counting sort)."""
    cdef uint8_t[::1] w = work
    cdef int32_t[::1] par = parent_ids
    cdef Py_ssize_t n = w.shape[0], i, p
    cdef Py_ssize_t off = offset
    cdef Py_ssize_t nt = n_total
    start_arr = np.zeros(nt + 1, dtype=np.int32)
    cdef int32_t[::1] start = start_arr
    for i in range(n):
        if w[i] >= 2:
            start[par[_wrap(i, off, n)] + 1] += 1
    for p in range(nt):
        start[p + 1] += start[p]
    members_arr = np.empty(start[nt], dtype=np.int32)
    cdef int32_t[::1] members = members_arr
    fill_arr = start_arr[:nt].copy()
    cdef int32_t[::1] fill = fill_arr
    for i in range(n):
        if w[i] >= 2:
            p = par[_wrap(i, off, n)]
            members[fill[p]] = i
            fill[p] += 1
    return start_arr, members_arr


def check_groups_pre(work, start, members):
    """Pre-resolution group checks; returns violation descriptions."""
    cdef uint8_t[::1] w = work
    cdef int32_t[::1] st = start
    cdef int32_t[::1] mem = members
    cdef Py_ssize_t n = w.shape[0]
    cdef Py_ssize_t nt = st.shape[0] - 1, p, a, b, cnt, m1, m2, m3
    cdef bint ok
    out = []
    for p in range(nt):
        a = st[p]
        b = st[p + 1]
        cnt = b - a
        if cnt <= 2:
            continue
        if cnt > 3:
            out.append(f"parent {p} has {cnt} two-colored cycle children")
            continue
        m1 = mem[a]
        m2 = mem[a + 1]
        m3 = mem[a + 2]
        ok = False
        if m2 - m1 == 1 and w[m1] != w[m2]:
            ok = True
        if m3 - m2 == 1 and w[m2] != w[m3]:
            ok = True
        if m1 == 0 and m3 == n - 1 and w[m3] != w[m1]:
            ok = True
        if not ok:
            out.append(
                f"parent {p} group {[m1, m2, m3]} lacks a consecutive pair with distinct colors"
            )
    return out


def resolve_conflicts(work, parent_ids, offset, start, members):
    """Resolve same-colored 2a/2b pairs under shared parents; mutates work."""
    cdef uint8_t[::1] w = work
    cdef int32_t[::1] par = parent_ids
    cdef int32_t[::1] st = start
    cdef int32_t[::1] mem = members
    cdef Py_ssize_t n = w.shape[0], i0, k, a, b, j0, prev0, rec, p
    cdef Py_ssize_t off = offset
    events = []
    for i0 in range(1, n, 2):
        p = par[_wrap(i0, off, n)]
        a = st[p]
        b = st[p + 1]
        if b - a < 2:
            continue
        for k in range(a, b):
            j0 = mem[k]
            if j0 == i0:
                continue
            if w[i0] == w[j0] and w[i0] != TWO_C:
                prev0 = i0 - 2 if i0 >= 2 else n - 1
                if w[prev0] != TWO_C:
                    w[i0] = TWO_C
                    rec = i0
                else:
                    w[j0] = TWO_C
                    rec = j0
                events.append((i0 + 1, j0 + 1, rec + 1))
                break
    return events


def check_groups_post(work, start, members):
    """Post-resolution group checks; returns violation descriptions."""
    cdef uint8_t[::1] w = work
    cdef int32_t[::1] st = start
    cdef int32_t[::1] mem = members
    cdef Py_ssize_t nt = st.shape[0] - 1, p, a, b, k, twoc
    out = []
    for p in range(nt):
        a = st[p]
        b = st[p + 1]
        if b - a < 2:
            continue
        twoc = 0
        for k in range(a, b):
            if w[mem[k]] == TWO_C:
                twoc += 1
        if twoc > 1:
            out.append(f"parent {p} has two 2c-colored cycle children")
        if b - a == 3:
            colors = {w[mem[a]], w[mem[a + 1]], w[mem[a + 2]]}
            if len(colors) != 3:
                out.append(
                    f"parent {p} group carries repeated colors "
                    f"{[w[mem[a]], w[mem[a + 1]], w[mem[a + 2]]]}"
                )
    return out


def scatter_cycle(codes, cycle, offset, work):
    """Write working colors back onto original vertex ids, in place."""
    cdef uint8_t[::1] cd = codes
    cdef int32_t[::1] c = cycle
    cdef uint8_t[::1] w = work
    cdef Py_ssize_t n = c.shape[0], k
    cdef Py_ssize_t off = offset
    for k in range(n):
        cd[c[_wrap(k, off, n)]] = w[k]


def verify_radius(indptr, nbrs, labels, radii):
    """Bounded-BFS distance check; returns (class, u, v, dist) with u < v."""
    cdef int32_t[::1] indl = indptr
    cdef int32_t[::1] nbl = nbrs
    cdef int32_t[::1] lab = labels
    cdef int32_t[::1] rad = radii
    cdef Py_ssize_t n_total = lab.shape[0]
    stamp_arr = np.full(n_total, -1, dtype=np.int32)
    dist_arr = np.zeros(n_total, dtype=np.int32)
    queue_arr = np.empty(n_total, dtype=np.int32)
    cdef int32_t[::1] stamp = stamp_arr
    cdef int32_t[::1] dist = dist_arr
    cdef int32_t[::1] queue = queue_arr
    cdef Py_ssize_t u, x, w, i, head, tail
    cdef int32_t lu, s, dx, dn
    out = []
    for u in range(n_total):
        lu = lab[u]
        s = rad[lu]
        stamp[u] = u
        dist[u] = 0
        queue[0] = u
        head = 0
        tail = 1
        while head < tail:
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
                    queue[tail] = w
                    tail += 1
                    if lab[w] == lu and u < w:
                        out.append((int(lu), int(u), int(w), int(dn)))
    return out
