"""Halin graph representation: a characteristic tree plus an adjoint cycle.

A Halin graph is a planar graph built from a tree with no degree-2 vertices
(the characteristic tree) by connecting its leaves with a cycle in planar
order (the adjoint cycle).  The graph object is immutable after construction
and safe for concurrent reads; all structural invariants are checked eagerly
by :func:`build_halin`.

Vertex ids are dense 0-based integers.  Cycle positions are 1-based in the
public helpers (:func:`cycle_successor` / :func:`cycle_predecessor`) to match
the coloring pipeline's indexing convention.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

import numpy as np


class HalinGraphError(ValueError):
    """Base class for structural validation failures."""


class NotATreeError(HalinGraphError):
    """Tree edges do not form a connected acyclic graph on all vertices."""


class DegreeTwoInternalError(HalinGraphError):
    """Some internal tree vertex has tree-degree 2."""


class CycleLeafMismatchError(HalinGraphError):
    """The cycle is not exactly the set of tree leaves, each once."""


class ArcContiguityViolation(HalinGraphError):
    """Some tree edge does not split the leaves into two circular arcs."""


class TooFewLeavesError(HalinGraphError):
    """Fewer than three leaves."""


class IndexOutOfRangeError(HalinGraphError):
    """Cycle index outside 1..n."""


class GraphFormatError(ValueError):
    """Malformed graph text."""


def _csr(n: int, pairs: Iterable[tuple[int, int]], degree: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Compressed adjacency (indptr, neighbors) from undirected edge pairs."""
    indptr = np.zeros(n + 1, dtype=np.int32)
    np.cumsum(degree, out=indptr[1:])
    nbrs = np.empty(int(indptr[-1]), dtype=np.int32)
    fill = indptr[:-1].copy()
    for u, v in pairs:
        nbrs[fill[u]] = v
        fill[u] += 1
        nbrs[fill[v]] = u
        fill[v] += 1
    return indptr, nbrs


class HalinGraph:
    """Validated, immutable Halin graph.

    Attributes:
        n_total: Number of vertices in the whole graph.
        tree_edges: The characteristic tree's edges, as given to the builder.
        cycle: Leaf vertices in planar cycle order.
        leaf_parent: Map from each cycle vertex to its unique tree neighbor.
        max_degree: Maximum degree of the full graph (tree plus cycle edges).
    """

    __slots__ = (
        "n_total",
        "tree_edges",
        "cycle",
        "leaf_parent",
        "max_degree",
        "tree_indptr",
        "tree_nbrs",
        "adj_indptr",
        "adj_nbrs",
        "cycle_array",
        "parent_array",
        "lowest_internal",
    )

    def __init__(self, **fields) -> None:
        for name in self.__slots__:
            object.__setattr__(self, name, fields[name])

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("HalinGraph is immutable")

    @property
    def num_leaves(self) -> int:
        """Number of cycle vertices (n in a_1..a_n)."""
        return len(self.cycle)

    def tree_neighbors(self, v: int) -> list[int]:
        """Neighbors of v in the characteristic tree."""
        lo, hi = self.tree_indptr[v], self.tree_indptr[v + 1]
        return self.tree_nbrs[lo:hi].tolist()

    def neighbors(self, v: int) -> list[int]:
        """Neighbors of v in the full graph."""
        lo, hi = self.adj_indptr[v], self.adj_indptr[v + 1]
        return self.adj_nbrs[lo:hi].tolist()

    def __repr__(self) -> str:
        return f"HalinGraph(n_total={self.n_total}, leaves={self.num_leaves}, max_degree={self.max_degree})"


def _check_ids(n_total: int, values: Iterable[int], what: str) -> None:
    for x in values:
        if not 0 <= x < n_total:
            raise HalinGraphError(f"{what} id {x} outside [0, {n_total})")


def _check_arc_contiguity(
    n_total: int,
    tree_indptr: np.ndarray,
    tree_nbrs: np.ndarray,
    cycle: Sequence[int],
    root: int,
) -> None:
    """Planarity witness: every tree edge must split the cycle into two arcs.

    Counts, for the child side of each tree edge, how many circularly
    consecutive leaf pairs cross the edge.  A leaf set is a circular arc
    exactly when that count is 1, and on a valid embedding the counts sum
    to n_total - 1, which bounds the walk.
    """
    parent = np.full(n_total, -1, dtype=np.int64)
    depth = np.zeros(n_total, dtype=np.int64)
    parent[root] = root
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in tree_nbrs[tree_indptr[v] : tree_indptr[v + 1]]:
            if parent[w] < 0:
                parent[w] = v
                depth[w] = depth[v] + 1
                queue.append(w)

    boundary = np.zeros(n_total, dtype=np.int64)
    budget = n_total - 1
    n = len(cycle)
    for i in range(n):
        x = cycle[i]
        y = cycle[(i + 1) % n]
        while depth[x] > depth[y]:
            boundary[x] += 1
            budget -= 1
            if budget < 0:
                raise ArcContiguityViolation("cycle order inconsistent with the tree embedding")
            x = parent[x]
        while depth[y] > depth[x]:
            y = parent[y]
        while x != y:
            boundary[x] += 1
            budget -= 1
            if budget < 0:
                raise ArcContiguityViolation("cycle order inconsistent with the tree embedding")
            x = parent[x]
            y = parent[y]

    boundary[root] = 1
    if not np.all(boundary == 1):
        bad = int(np.flatnonzero(boundary != 1)[0])
        raise ArcContiguityViolation(
            f"tree edge above vertex {bad} splits the leaves into {int(boundary[bad])} arcs"
        )


def build_halin(
    n_total: int,
    tree_edges: Sequence[tuple[int, int]],
    cycle: Sequence[int],
) -> HalinGraph:
    """Validate and construct a Halin graph.

    Args:
        n_total: Number of vertices; ids must be dense in [0, n_total).
        tree_edges: The n_total - 1 edges of the characteristic tree.
        cycle: The tree's leaves in planar order.

    Raises:
        NotATreeError: Edges do not form a tree on all vertices.
        TooFewLeavesError: Fewer than three cycle vertices.
        CycleLeafMismatchError: Cycle is not exactly the leaf set.
        ArcContiguityViolation: Leaf order is not a planar embedding order.
        DegreeTwoInternalError: An internal tree vertex has degree 2.
    """
    if n_total < 1:
        raise HalinGraphError("n_total must be positive")
    edges = [(int(u), int(v)) for u, v in tree_edges]
    _check_ids(n_total, (x for e in edges for x in e), "tree edge")
    if len(edges) != n_total - 1:
        raise NotATreeError(f"expected {n_total - 1} tree edges, got {len(edges)}")

    seen: set[tuple[int, int]] = set()
    tree_degree = np.zeros(n_total, dtype=np.int32)
    for u, v in edges:
        if u == v:
            raise NotATreeError(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise NotATreeError(f"duplicate tree edge {key}")
        seen.add(key)
        tree_degree[u] += 1
        tree_degree[v] += 1

    tree_indptr, tree_nbrs = _csr(n_total, edges, tree_degree)

    # Connectivity; with exactly n_total - 1 distinct edges this certifies a tree.
    reached = np.zeros(n_total, dtype=bool)
    reached[0] = True
    queue = deque([0])
    count = 1
    while queue:
        v = queue.popleft()
        for w in tree_nbrs[tree_indptr[v] : tree_indptr[v + 1]]:
            if not reached[w]:
                reached[w] = True
                count += 1
                queue.append(w)
    if count != n_total:
        raise NotATreeError("tree edges do not connect all vertices")

    cyc = [int(a) for a in cycle]
    if len(cyc) < 3:
        raise TooFewLeavesError(f"cycle has {len(cyc)} vertices, need at least 3")
    _check_ids(n_total, cyc, "cycle")
    leaves = set(np.flatnonzero(tree_degree == 1).tolist())
    if len(set(cyc)) != len(cyc) or set(cyc) != leaves:
        raise CycleLeafMismatchError("cycle must list every tree leaf exactly once")

    internal = np.flatnonzero(tree_degree >= 2)
    if len(internal) == 0:
        raise NotATreeError("tree has no internal vertex")
    lowest_internal = int(internal[0])

    _check_arc_contiguity(n_total, tree_indptr, tree_nbrs, cyc, lowest_internal)

    bad_internal = np.flatnonzero(tree_degree == 2)
    if len(bad_internal) > 0:
        raise DegreeTwoInternalError(f"internal vertex {int(bad_internal[0])} has tree-degree 2")

    cycle_array = np.asarray(cyc, dtype=np.int32)
    parent_array = np.empty(len(cyc), dtype=np.int32)
    for i, a in enumerate(cyc):
        parent_array[i] = tree_nbrs[tree_indptr[a]]
    leaf_parent = {int(a): int(parent_array[i]) for i, a in enumerate(cyc)}

    n = len(cyc)
    cycle_pairs = [(cyc[i], cyc[(i + 1) % n]) for i in range(n)]
    full_degree = tree_degree.copy()
    for a in cyc:
        full_degree[a] += 2
    adj_indptr, adj_nbrs = _csr(n_total, edges + cycle_pairs, full_degree)

    return HalinGraph(
        n_total=n_total,
        tree_edges=tuple(edges),
        cycle=tuple(cyc),
        leaf_parent=leaf_parent,
        max_degree=int(full_degree.max()),
        tree_indptr=tree_indptr,
        tree_nbrs=tree_nbrs,
        adj_indptr=adj_indptr,
        adj_nbrs=adj_nbrs,
        cycle_array=cycle_array,
        parent_array=parent_array,
        lowest_internal=lowest_internal,
    )


def distance(g: HalinGraph, u: int, v: int) -> int:
    """Shortest-path length in edges between u and v in the full graph."""
    _check_ids(g.n_total, (u, v), "vertex")
    if u == v:
        return 0
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        d = dist[x] + 1
        for w in g.neighbors(x):
            if w == v:
                return d
            if w not in dist:
                dist[w] = d
                queue.append(w)
    raise HalinGraphError("graph is not connected")  # unreachable on validated graphs


def cycle_successor(g: HalinGraph, i: int) -> int:
    """Successor of 1-based cycle index i; wraps n -> 1."""
    n = g.num_leaves
    if not 1 <= i <= n:
        raise IndexOutOfRangeError(f"cycle index {i} outside 1..{n}")
    return 1 if i == n else i + 1


def cycle_predecessor(g: HalinGraph, i: int) -> int:
    """Predecessor of 1-based cycle index i; wraps 1 -> n."""
    n = g.num_leaves
    if not 1 <= i <= n:
        raise IndexOutOfRangeError(f"cycle index {i} outside 1..{n}")
    return n if i == 1 else i - 1


# ---------------------------------------------------------------------------
# Text format
#
#   HALIN 1
#   VERTICES <N>
#   TREE <u> <v>          (N-1 lines, 0-based ids)
#   CYCLE <a_1> ... <a_n> (one line, planar order)
#
# '#' starts a comment to end of line.  Parsing is strict.
# ---------------------------------------------------------------------------


def graph_to_text(g: HalinGraph) -> str:
    """Serialize a graph in the line-oriented text format."""
    lines = ["HALIN 1", f"VERTICES {g.n_total}"]
    lines.extend(f"TREE {u} {v}" for u, v in g.tree_edges)
    lines.append("CYCLE " + " ".join(str(a) for a in g.cycle))
    return "\n".join(lines) + "\n"


def _int_token(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(f"line {lineno}: expected integer, got {tok!r}") from None


def graph_from_text(text: str) -> HalinGraph:
    """Parse the text format and validate via :func:`build_halin`."""
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))

    if not rows:
        raise GraphFormatError("empty input")
    lineno, head = rows[0]
    if head != ["HALIN", "1"]:
        raise GraphFormatError(f"line {lineno}: expected header 'HALIN 1'")
    if len(rows) < 2 or rows[1][1][0] != "VERTICES":
        raise GraphFormatError("missing VERTICES line")
    lineno, vert = rows[1]
    if len(vert) != 2:
        raise GraphFormatError(f"line {lineno}: VERTICES takes one count")
    n_total = _int_token(vert[1], lineno)
    if n_total < 1:
        raise GraphFormatError(f"line {lineno}: vertex count must be positive")

    edges: list[tuple[int, int]] = []
    cycle: list[int] | None = None
    for lineno, toks in rows[2:]:
        if toks[0] == "TREE":
            if cycle is not None:
                raise GraphFormatError(f"line {lineno}: TREE after CYCLE")
            if len(toks) != 3:
                raise GraphFormatError(f"line {lineno}: TREE takes two vertex ids")
            edges.append((_int_token(toks[1], lineno), _int_token(toks[2], lineno)))
        elif toks[0] == "CYCLE":
            if cycle is not None:
                raise GraphFormatError(f"line {lineno}: duplicate CYCLE line")
            cycle = [_int_token(t, lineno) for t in toks[1:]]
        else:
            raise GraphFormatError(f"line {lineno}: unknown keyword {toks[0]!r}")

    if cycle is None:
        raise GraphFormatError("missing CYCLE line")
    if len(edges) != n_total - 1:
        raise GraphFormatError(f"expected {n_total - 1} TREE lines, got {len(edges)}")
    try:
        return build_halin(n_total, edges, cycle)
    except HalinGraphError:
        raise
