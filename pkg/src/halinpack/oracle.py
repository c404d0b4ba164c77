"""Exact backtracking decision procedure for S-packing colorability.

Ground truth for small graphs: complete search over class assignments with
distance-matrix pruning, plus a cross-check harness tying the constructive
colorer and this oracle together.  Guarded by a vertex-count limit because
the worst case is exponential.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import HalinGraph
from .verifier import PackingSequence

DEFAULT_MAX_VERTICES = 24


class OracleTooLargeError(ValueError):
    """Graph exceeds the exhaustive-search guard."""


@dataclass(frozen=True)
class OracleResult:
    """feasible implies a witness mapping vertex -> class index in 1..k."""

    feasible: bool
    witness: dict[int, int] | None


def all_pairs_distances(g: HalinGraph) -> np.ndarray:
    """Exact hop-distance matrix via breadth-first search from every vertex."""
    n = g.n_total
    indptr = g.adj_indptr.tolist()
    nbrs = g.adj_nbrs.tolist()
    d = np.full((n, n), -1, dtype=np.int32)
    for u in range(n):
        row = d[u]
        row[u] = 0
        queue = [u]
        head = 0
        while head < len(queue):
            x = queue[head]
            head += 1
            dn = row[x] + 1
            for i in range(indptr[x], indptr[x + 1]):
                w = nbrs[i]
                if row[w] < 0:
                    row[w] = dn
                    queue.append(w)
    return d


def s_packing_colorable(
    g: HalinGraph,
    radii: PackingSequence | Sequence[int],
    *,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> OracleResult:
    """Decide whether g admits an S-packing coloring for the given radii.

    Complete backtracking over vertices in descending-degree order (ties by
    id); a class is viable for v when every assigned member sits strictly
    farther than the class radius.  Unused classes of equal radius are
    interchangeable, so only the first is tried, which prunes permutations
    without affecting the decision.

    Raises:
        OracleTooLargeError: n_total exceeds max_vertices.
    """
    seq = radii if isinstance(radii, PackingSequence) else PackingSequence(tuple(radii))
    if g.n_total > max_vertices:
        raise OracleTooLargeError(
            f"graph has {g.n_total} vertices; exhaustive search is guarded at {max_vertices}"
        )
    dist = all_pairs_distances(g).tolist()
    n = g.n_total
    k = len(seq)
    rad = list(seq)
    degree = [int(g.adj_indptr[v + 1] - g.adj_indptr[v]) for v in range(n)]
    order = sorted(range(n), key=lambda v: (-degree[v], v))
    assign = [-1] * n
    members: list[list[int]] = [[] for _ in range(k)]

    def backtrack(t: int) -> bool:
        if t == n:
            return True
        v = order[t]
        dv = dist[v]
        tried_empty_radius: set[int] = set()
        for c in range(k):
            s = rad[c]
            if not members[c]:
                if s in tried_empty_radius:
                    continue
                tried_empty_radius.add(s)
            if all(dv[u] > s for u in members[c]):
                members[c].append(v)
                assign[v] = c
                if backtrack(t + 1):
                    return True
                members[c].pop()
                assign[v] = -1
        return False

    if backtrack(0):
        return OracleResult(True, {v: assign[v] + 1 for v in range(n)})
    return OracleResult(False, None)


def cross_check(g: HalinGraph, *, max_vertices: int = DEFAULT_MAX_VERTICES) -> bool:
    """Constructive coloring verified AND exhaustive search agrees it exists."""
    from .colorer import STANDARD_CLASSES, packing_coloring
    from .verifier import verify_packing

    coloring = packing_coloring(g)
    constructed_ok = verify_packing(g, coloring, STANDARD_CLASSES).ok
    exists = s_packing_colorable(g, (1, 1, 2, 2, 2), max_vertices=max_vertices).feasible
    return constructed_ok and exists
