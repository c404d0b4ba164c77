"""Cycle-recoloring pipeline producing a (1,1,2,2,2)-packing coloring.

Stages, in order: proper 2-coloring of the characteristic tree; recoloring of
the adjoint cycle in a working order fixed by an optional cyclic relabeling
(two cases, driven by whether all cycle vertices got the same tree color);
resolution of same-colored 2a/2b pairs under a shared tree parent.  Structural
invariants of the intermediate states are checked on every run and raise
:class:`InvariantViolation` when broken.

The hot loops live in :mod:`halinpack._kernels`; this module owns the domain
types, the stage contracts, and the mapping between working positions and
original vertex ids.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from types import ModuleType
from typing import Mapping, Sequence

import numpy as np

from . import _kernels
from .graph import HalinGraph


class Color(Enum):
    """The five colors: two of packing radius 1, three of radius 2."""

    ONE = "1"
    ONE_PRIME = "1p"
    TWO_A = "2a"
    TWO_B = "2b"
    TWO_C = "2c"

    @property
    def radius(self) -> int:
        return 1 if self in (Color.ONE, Color.ONE_PRIME) else 2

    @property
    def token(self) -> str:
        """Spelling used in coloring files and CLI class specs."""
        return self.value

    def __str__(self) -> str:
        return "1'" if self is Color.ONE_PRIME else self.value


_COLOR_BY_CODE = (Color.ONE, Color.ONE_PRIME, Color.TWO_A, Color.TWO_B, Color.TWO_C)
_CODE_BY_COLOR = {c: i for i, c in enumerate(_COLOR_BY_CODE)}
COLOR_BY_TOKEN = {c.token: c for c in Color}

Coloring = dict[int, Color]

STANDARD_CLASSES: dict[Color, int] = {c: c.radius for c in Color}


class NotAOneColorError(ValueError):
    """complement_one applied to a radius-2 color."""


class MaxDegreeExceededError(ValueError):
    """The coloring algorithm only covers maximum degree 5."""


class InvariantViolation(RuntimeError):
    """A structural invariant of the pipeline failed at runtime."""


class ColoringFormatError(ValueError):
    """Malformed coloring text."""


def complement_one(c: Color) -> Color:
    """The other radius-1 color."""
    if c is Color.ONE:
        return Color.ONE_PRIME
    if c is Color.ONE_PRIME:
        return Color.ONE
    raise NotAOneColorError(f"{c} is not a radius-1 color")


@dataclass(frozen=True)
class CycleView:
    """Working permutation of the cycle used by the recoloring stages.

    Working position j (1-based) reads original cycle position
    ((j - 1 + offset) mod n) + 1.  offset is 0 when all_same is True.
    """

    all_same: bool
    offset: int
    order: tuple[int, ...]


@dataclass(frozen=True)
class TemplateMatch:
    matched: bool
    label: str | None

    @staticmethod
    def no_match() -> "TemplateMatch":
        return TemplateMatch(False, None)


@dataclass
class PipelineRun:
    """Everything one pipeline execution produced, including trace data.

    ``codes`` holds the final color code per vertex id; ``coloring`` builds
    the id -> Color mapping on first access.  ``working_pre`` is the working
    cycle coloring before conflict resolution (the template-checkable state).
    Working indices in ``conflict_events`` are 1-based (i, j, recolored).
    """

    graph: HalinGraph
    codes: np.ndarray
    all_same: bool
    offset: int
    fix_shared_parent: bool
    fix_separated: bool
    working_pre: np.ndarray
    working_post: np.ndarray
    conflict_events: list[tuple[int, int, int]]
    stage_ns: dict[str, int]
    backend: str
    _coloring: Coloring | None = field(default=None, repr=False)

    @property
    def case(self) -> str:
        return "case2" if self.all_same else "case1"

    @property
    def view(self) -> CycleView:
        order = tuple(np.roll(self.graph.cycle_array, -self.offset).tolist())
        return CycleView(self.all_same, self.offset, order)

    @property
    def coloring(self) -> Coloring:
        if self._coloring is None:
            self._coloring = {
                v: _COLOR_BY_CODE[c] for v, c in enumerate(self.codes.tolist())
            }
        return self._coloring


def _backend(backend: str | ModuleType | None) -> ModuleType:
    if backend is None:
        return _kernels.active
    if isinstance(backend, str):
        return _kernels.get_backend(backend)
    return backend


def _tree_codes(g: HalinGraph, phi: Mapping[int, Color]) -> np.ndarray:
    codes = np.empty(g.n_total, dtype=np.uint8)
    for v in range(g.n_total):
        c = phi.get(v)
        if c is None:
            raise ValueError(f"coloring misses vertex {v}")
        if c.radius != 1:
            raise NotAOneColorError(f"vertex {v} carries {c}, expected a tree 2-coloring")
        codes[v] = _CODE_BY_COLOR[c]
    return codes


def two_color_tree(g: HalinGraph, root: int) -> Coloring:
    """Proper 2-coloring of the characteristic tree by breadth-first parity.

    The root gets color 1; every tree edge ends up bichromatic.
    """
    if not 0 <= root < g.n_total:
        raise ValueError(f"root {root} outside [0, {g.n_total})")
    codes = _kernels.active.two_color_tree(g.tree_indptr, g.tree_nbrs, root, g.n_total)
    return {v: _COLOR_BY_CODE[c] for v, c in enumerate(codes.tolist())}


def recoloring_dispatch(g: HalinGraph, phi: Mapping[int, Color]) -> tuple[CycleView, Coloring]:
    """Choose the working order and case, then recolor the cycle.

    With equal first/last cycle colors and some color change at index i, the
    working order rotates so the old position i leads; if no change exists
    anywhere the all_same case applies without rotation.
    """
    tcodes = _tree_codes(g, phi)
    all_same, offset = _kernels.active.scan_rotation(tcodes, g.cycle_array)
    order = tuple(np.roll(g.cycle_array, -offset).tolist())
    view = CycleView(all_same, offset, order)
    recolored = case2(g, view, phi) if all_same else case1(g, view, phi)
    return view, recolored


def _apply_case(
    g: HalinGraph,
    view: CycleView,
    phi: Mapping[int, Color],
    second_case: bool,
) -> Coloring:
    tcodes = _tree_codes(g, phi)
    work, _, _ = _kernels.active.recolor_working(
        second_case, tcodes, g.parent_array, view.offset
    )
    out = dict(phi)
    for a, code in zip(view.order, work.tolist()):
        out[a] = _COLOR_BY_CODE[code]
    return out


def case1(g: HalinGraph, view: CycleView, phi: Mapping[int, Color]) -> Coloring:
    """Recolor the working cycle when the endpoint tree colors differ."""
    if view.all_same:
        raise ValueError("case1 requires a view with all_same=False")
    return _apply_case(g, view, phi, False)


def case2(g: HalinGraph, view: CycleView, phi: Mapping[int, Color]) -> Coloring:
    """Recolor the working cycle when every leaf got the same tree color."""
    if not view.all_same:
        raise ValueError("case2 requires a view with all_same=True")
    return _apply_case(g, view, phi, True)


def conflicts_resolving(
    g: HalinGraph,
    view: CycleView,
    phi: Mapping[int, Color],
) -> Coloring:
    """Resolve same-colored 2a/2b pairs under shared parents with 2c.

    Returns the final coloring keyed by original vertex ids.
    """
    work = np.array([_CODE_BY_COLOR[phi[a]] for a in view.order], dtype=np.uint8)
    kern = _kernels.active
    start, members = kern.group_by_parent(work, g.parent_array, view.offset, g.n_total)
    bad = kern.check_groups_pre(work, start, members)
    if bad:
        raise InvariantViolation("; ".join(bad))
    kern.resolve_conflicts(work, g.parent_array, view.offset, start, members)
    bad = kern.check_groups_post(work, start, members)
    if bad:
        raise InvariantViolation("; ".join(bad))
    out = dict(phi)
    for a, code in zip(view.order, work.tolist()):
        out[a] = _COLOR_BY_CODE[code]
    return out


def two_neighborhoods(g: HalinGraph, phi: Mapping[int, Color]) -> dict[int, tuple[int, ...]]:
    """Map each tree parent to its radius-2-colored cycle children, in cycle order."""
    groups: dict[int, list[int]] = {}
    for a in g.cycle:
        if phi[a].radius == 2:
            groups.setdefault(g.leaf_parent[a], []).append(a)
    return {b: tuple(v) for b, v in groups.items()}


def run_pipeline(g: HalinGraph, *, backend: str | ModuleType | None = None) -> PipelineRun:
    """Execute the whole pipeline and return the run record.

    Deterministic: the tree root is the lowest-id internal vertex.  Raises
    MaxDegreeExceededError above degree 5 and InvariantViolation if any
    structural check fails.
    """
    if g.max_degree > 5:
        raise MaxDegreeExceededError(
            f"graph has maximum degree {g.max_degree}; the algorithm requires at most 5"
        )
    kern = _backend(backend)
    root = g.lowest_internal

    t0 = time.perf_counter_ns()
    tcodes = kern.two_color_tree(g.tree_indptr, g.tree_nbrs, root, g.n_total)
    t1 = time.perf_counter_ns()

    all_same, offset = kern.scan_rotation(tcodes, g.cycle_array)
    work, fix1, fix2 = kern.recolor_working(all_same, tcodes, g.parent_array, offset)
    t2 = time.perf_counter_ns()

    start, members = kern.group_by_parent(work, g.parent_array, offset, g.n_total)
    bad = kern.check_groups_pre(work, start, members)
    if bad:
        raise InvariantViolation("; ".join(bad))
    working_pre = work.copy()
    events = kern.resolve_conflicts(work, g.parent_array, offset, start, members)
    bad = kern.check_groups_post(work, start, members)
    if bad:
        raise InvariantViolation("; ".join(bad))
    t3 = time.perf_counter_ns()

    codes = tcodes
    kern.scatter_cycle(codes, g.cycle_array, offset, work)
    t4 = time.perf_counter_ns()

    return PipelineRun(
        graph=g,
        codes=codes,
        all_same=all_same,
        offset=offset,
        fix_shared_parent=fix1,
        fix_separated=fix2,
        working_pre=working_pre,
        working_post=work,
        conflict_events=events,
        stage_ns={
            "tree": t1 - t0,
            "recolor": t2 - t1,
            "conflicts": t3 - t2,
            "total": t4 - t0,
        },
        backend=_kernels_name(kern),
    )


def _kernels_name(module: ModuleType) -> str:
    return "pure" if module is _kernels.pure else "native"


def packing_coloring(g: HalinGraph) -> Coloring:
    """The (1,1,2,2,2)-packing coloring of g; pure function of the graph."""
    return run_pipeline(g).coloring


# ---------------------------------------------------------------------------
# Working-order templates
# ---------------------------------------------------------------------------

_A, _B, _C = 2, 3, 4


def _main_pattern(n: int) -> np.ndarray:
    cand = np.full(n, -1, dtype=np.int16)
    m = (n // 4) * 4
    cand[1:m:4] = _A
    cand[3:m:4] = _B
    return cand


def _template_candidates(n: int, case: str) -> list[tuple[str, np.ndarray]]:
    r = n % 4
    base = _main_pattern(n)
    if case == "case1":
        cand = base.copy()
        if r == 2 or r == 3:
            cand[n - 2] = _A
        return [("case1", cand)]
    out = []
    if r == 0:
        out.append(("case2", base))
    elif r == 1:
        plain = base.copy()
        plain[n - 1] = _C
        shared = plain.copy()
        shared[1] = _C
        shared[n - 2] = _C
        shared[n - 1] = _A
        separated = plain.copy()
        separated[1] = _C
        separated[n - 1] = _A
        out += [("case2", plain), ("case2+shared-parent-fix", shared), ("case2+separated-fix", separated)]
    elif r == 2:
        plain = base.copy()
        plain[n - 1] = _C
        separated = plain.copy()
        separated[1] = _C
        separated[n - 1] = _A
        out += [("case2", plain), ("case2+separated-fix", separated)]
    else:
        cand = base.copy()
        cand[n - 3] = _A
        cand[n - 1] = _B
        out.append(("case2", cand))
    return out


def check_template(
    working: np.ndarray | Sequence[Color],
    n: int,
    case: str,
) -> TemplateMatch:
    """Which enumerated pre-conflicts color sequence the working order matches.

    Positions holding radius-1 colors act as wildcards over {1, 1'}.  Only
    defined for n >= 8; case is "case1" or "case2".
    """
    if case not in ("case1", "case2"):
        raise ValueError(f"case must be 'case1' or 'case2', got {case!r}")
    if n < 8:
        raise ValueError(f"templates are only defined for n >= 8, got {n}")
    if isinstance(working, np.ndarray):
        work = working.astype(np.int16)
    else:
        work = np.array([_CODE_BY_COLOR[c] for c in working], dtype=np.int16)
    if len(work) != n:
        raise ValueError(f"working coloring has {len(work)} entries, expected {n}")
    for label, cand in _template_candidates(n, case):
        if bool(np.all(np.where(cand < 0, work <= 1, cand == work))):
            return TemplateMatch(True, label)
    return TemplateMatch.no_match()


def trace_lines(run: PipelineRun) -> list[str]:
    """Flag-gated trace: one line per stage plus one per conflict event."""
    lines = [
        f"stage tree-coloring root={run.graph.lowest_internal} backend={run.backend}",
        (
            f"stage recoloring all_same={str(run.all_same).lower()} offset={run.offset} "
            f"case={run.case} fix_shared_parent={str(run.fix_shared_parent).lower()} "
            f"fix_separated={str(run.fix_separated).lower()}"
        ),
        f"stage conflicts-resolving events={len(run.conflict_events)}",
    ]
    lines.extend(
        f"conflict i={i} j={j} recolored={rec}" for i, j, rec in run.conflict_events
    )
    return lines


# ---------------------------------------------------------------------------
# Coloring text format
#
#   COLORING 1
#   <vertex_id> <color>   (ascending 0-based ids; color tokens like 1, 1p, 2a)
# ---------------------------------------------------------------------------


def coloring_to_text(coloring: Mapping[int, Color | str]) -> str:
    """Serialize a coloring; accepts Color values or plain string labels."""
    lines = ["COLORING 1"]
    for v in sorted(coloring):
        c = coloring[v]
        token = c.token if isinstance(c, Color) else str(c)
        lines.append(f"{v} {token}")
    return "\n".join(lines) + "\n"


def coloring_from_text(text: str) -> dict[int, str]:
    """Parse a coloring file into id -> label tokens (labels stay opaque)."""
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise ColoringFormatError("empty input")
    lineno, head = rows[0]
    if head != ["COLORING", "1"]:
        raise ColoringFormatError(f"line {lineno}: expected header 'COLORING 1'")
    out: dict[int, str] = {}
    last = -1
    for lineno, toks in rows[1:]:
        if len(toks) != 2:
            raise ColoringFormatError(f"line {lineno}: expected '<vertex_id> <color>'")
        try:
            v = int(toks[0])
        except ValueError:
            raise ColoringFormatError(f"line {lineno}: bad vertex id {toks[0]!r}") from None
        if v <= last:
            raise ColoringFormatError(f"line {lineno}: vertex ids must be strictly ascending")
        last = v
        out[v] = toks[1]
    return out


def coloring_as_colors(parsed: Mapping[int, str]) -> Coloring:
    """Interpret parsed labels as the five standard colors."""
    out: Coloring = {}
    for v, token in parsed.items():
        c = COLOR_BY_TOKEN.get(token)
        if c is None:
            raise ColoringFormatError(f"unknown color token {token!r} for vertex {v}")
        out[v] = c
    return out
