"""Independent checker that a coloring is an S-packing coloring.

Deliberately shares no code path with the colorer: it sees only the graph
adjacency, an opaque class label per vertex, and a radius per class.  Each
class of radius s must keep pairwise distance at least s + 1, checked by
bounded breadth-first exploration to depth s from every vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import ModuleType
from typing import Hashable, Mapping, Sequence

import numpy as np

from . import _kernels
from .graph import HalinGraph


class PartialColoringError(ValueError):
    """Some vertex has no color."""


class UnmappedColorError(ValueError):
    """A color in the coloring has no radius assignment."""


@dataclass(frozen=True)
class PackingSequence:
    """Non-decreasing sequence of positive packing radii."""

    radii: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(s < 1 for s in self.radii):
            raise ValueError(f"radii must be positive: {self.radii}")
        if any(a > b for a, b in zip(self.radii, self.radii[1:])):
            raise ValueError(f"radii must be non-decreasing: {self.radii}")

    @staticmethod
    def of(*radii: int) -> "PackingSequence":
        return PackingSequence(tuple(radii))

    @staticmethod
    def from_text(text: str) -> "PackingSequence":
        """Parse a comma-separated radius list like '1,2,2,2'."""
        try:
            return PackingSequence(tuple(int(t) for t in text.split(",")))
        except ValueError as e:
            raise ValueError(f"bad packing sequence {text!r}: {e}") from None

    def __len__(self) -> int:
        return len(self.radii)

    def __iter__(self):
        return iter(self.radii)


@dataclass(frozen=True)
class Violation:
    label: object
    u: int
    v: int
    distance: int


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    violations: tuple[Violation, ...]


def verify_packing(
    g: HalinGraph,
    coloring: Mapping[int, Hashable],
    classes: Mapping[Hashable, int],
    *,
    backend: str | ModuleType | None = None,
) -> VerificationReport:
    """Check every same-class pair keeps distance >= radius + 1.

    All offending pairs are reported, ordered by (class, u, v).  Colors are
    opaque labels; anything hashable with a radius in ``classes`` works.

    Raises:
        PartialColoringError: A vertex is missing from the coloring.
        UnmappedColorError: A vertex's color has no radius in ``classes``.
    """
    label_order = sorted(classes, key=str)
    index = {label: i for i, label in enumerate(label_order)}
    labels = np.empty(g.n_total, dtype=np.int32)
    for v in range(g.n_total):
        c = coloring.get(v)
        if c is None:
            raise PartialColoringError(f"vertex {v} has no color")
        i = index.get(c)
        if i is None:
            raise UnmappedColorError(f"color {c!r} of vertex {v} has no radius assignment")
        labels[v] = i
    radii = np.array([classes[label] for label in label_order], dtype=np.int32)

    if backend is None:
        kern = _kernels.active
    elif isinstance(backend, str):
        kern = _kernels.get_backend(backend)
    else:
        kern = backend
    raw = kern.verify_radius(g.adj_indptr, g.adj_nbrs, labels, radii)
    violations = tuple(
        Violation(label_order[ci], u, v, d)
        for ci, u, v, d in sorted(raw, key=lambda t: (str(label_order[t[0]]), t[1], t[2]))
    )
    return VerificationReport(ok=not violations, violations=violations)


def verify_sequence_form(
    classes: Mapping[Hashable, int],
    expected: PackingSequence | Sequence[int],
) -> bool:
    """True iff the multiset of class radii equals the expected sequence."""
    return sorted(classes.values()) == sorted(expected)
