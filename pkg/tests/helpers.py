"""Independent reference implementations used as test oracles.

Nothing here may call into the code paths it checks: the naive verifier
works from a full distance matrix, and the arc test enumerates every tree
edge's leaf partition directly.
"""

from __future__ import annotations

from collections import deque
from typing import Hashable, Mapping

from halinpack import HalinGraph, all_pairs_distances


def naive_violations(
    g: HalinGraph,
    coloring: Mapping[int, Hashable],
    classes: Mapping[Hashable, int],
) -> list[tuple[object, int, int, int]]:
    """All same-class pairs too close, from the full distance matrix."""
    dist = all_pairs_distances(g)
    out = []
    for u in range(g.n_total):
        cu = coloring[u]
        s = classes[cu]
        for v in range(u + 1, g.n_total):
            if coloring[v] == cu and dist[u][v] <= s:
                out.append((cu, u, v, int(dist[u][v])))
    out.sort(key=lambda t: (str(t[0]), t[1], t[2]))
    return out


def naive_arc_contiguous(
    n_total: int,
    tree_edges: list[tuple[int, int]],
    cycle: list[int],
) -> bool:
    """Enumerate every tree edge and test both leaf sides for circular-arc shape."""
    adj: dict[int, list[int]] = {v: [] for v in range(n_total)}
    for u, v in tree_edges:
        adj[u].append(v)
        adj[v].append(u)
    pos = {a: i for i, a in enumerate(cycle)}
    n = len(cycle)

    def component_leaves(start: int, blocked_edge: tuple[int, int]) -> set[int]:
        seen = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if (x, y) == blocked_edge or (y, x) == blocked_edge:
                    continue
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return {pos[v] for v in seen if v in pos}

    def is_circular_arc(positions: set[int]) -> bool:
        if not positions or len(positions) == n:
            return True
        boundaries = sum(1 for p in positions if (p + 1) % n not in positions)
        return boundaries == 1

    for u, v in tree_edges:
        side = component_leaves(v, (u, v))
        if not is_circular_arc(side) or not is_circular_arc(set(range(n)) - side):
            return False
    return True
