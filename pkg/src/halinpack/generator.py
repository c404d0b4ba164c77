"""Deterministic, seeded construction of Halin graphs for tests and benchmarks.

Random instances grow a rooted plane tree by repeatedly expanding a leaf into
an internal vertex with 2..4 ordered children, which keeps every internal
tree-degree in [3, max_degree] by construction; the adjoint cycle is the
leaves in left-to-right depth-first order.  The pseudo-random source is
splitmix64, so identical configs reproduce byte-identical graphs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import HalinGraph, TooFewLeavesError, build_halin

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """The splitmix64 generator: fixed, named, splittable, 64-bit state."""

    __slots__ = ("_state",)

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform-ish draw in [0, bound); modulo reduction."""
        return self.next_u64() % bound

    def split(self) -> "SplitMix64":
        """Independent child stream seeded from this one."""
        return SplitMix64(self.next_u64())


class InfeasibleConfigError(ValueError):
    """Config cannot produce a valid graph."""


class UnknownFamilyError(ValueError):
    """gen_family got an unrecognized family name."""


@dataclass(frozen=True)
class GeneratorConfig:
    """Target leaf count is approximate (overshoot of at most 2)."""

    target_leaves: int
    max_degree: int = 5
    seed: int = 0


def gen_random_halin(cfg: GeneratorConfig) -> HalinGraph:
    """Seeded random Halin graph with internal tree-degrees in [3, max_degree].

    Identical configs produce identical graphs.  target_leaves=3 always
    yields the smallest Halin graph (a 3-leaf star plus triangle).
    """
    if cfg.max_degree < 3:
        raise InfeasibleConfigError(f"max_degree must be at least 3, got {cfg.max_degree}")
    if cfg.target_leaves < 3:
        raise InfeasibleConfigError(f"target_leaves must be at least 3, got {cfg.target_leaves}")

    rng = SplitMix64(cfg.seed)
    children: list[list[int]] = [[1, 2, 3], [], [], []]
    leaves = [1, 2, 3]
    max_kids = min(4, cfg.max_degree - 1)
    while len(leaves) < cfg.target_leaves:
        pick = rng.below(len(leaves))
        v = leaves[pick]
        leaves[pick] = leaves[-1]
        leaves.pop()
        kids = 2 + rng.below(max_kids - 1)
        for _ in range(kids):
            w = len(children)
            children.append([])
            children[v].append(w)
            leaves.append(w)

    cycle: list[int] = []
    stack = [0]
    while stack:
        v = stack.pop()
        if children[v]:
            stack.extend(reversed(children[v]))
        else:
            cycle.append(v)
    edges = [(parent, child) for parent, kids in enumerate(children) for child in kids]
    return build_halin(len(children), edges, cycle)


def gen_wheel(k: int) -> HalinGraph:
    """Wheel: star tree (hub 0, leaves 1..k) plus the rim cycle; degree k hub."""
    if k < 3:
        raise TooFewLeavesError(f"a wheel needs at least 3 rim vertices, got {k}")
    edges = [(0, i) for i in range(1, k + 1)]
    return build_halin(k + 1, edges, list(range(1, k + 1)))


def gen_cubic_caterpillar(path_len: int) -> HalinGraph:
    """Cubic Halin graph over an internal path of path_len vertices.

    Path ends carry two leaf children each, middles one, so every internal
    vertex has tree-degree exactly 3; path_len=1 degenerates to the 3-leaf
    star.  Yields path_len + 2 leaves.
    """
    if path_len < 1:
        raise InfeasibleConfigError(f"path_len must be at least 1, got {path_len}")
    edges = [(i, i + 1) for i in range(path_len - 1)]
    cycle: list[int] = []
    next_id = path_len

    def add_leaf(owner: int) -> None:
        nonlocal next_id
        edges.append((owner, next_id))
        cycle.append(next_id)
        next_id += 1

    if path_len == 1:
        for _ in range(3):
            add_leaf(0)
    else:
        add_leaf(0)
        add_leaf(0)
        for mid in range(1, path_len - 1):
            add_leaf(mid)
        add_leaf(path_len - 1)
        add_leaf(path_len - 1)
    return build_halin(next_id, edges, cycle)


def gen_family(name: str, **params) -> list[HalinGraph]:
    """Deterministic instance families.

    wheel: ks (default 3..5); cubic_caterpillar: lengths (default 1..8);
    random_small_batch: count graphs with distinct seeds and n_total <= 14
    (count default 50, seed default 0).
    """
    if name == "wheel":
        return [gen_wheel(k) for k in params.get("ks", range(3, 6))]
    if name == "cubic_caterpillar":
        return [gen_cubic_caterpillar(length) for length in params.get("lengths", range(1, 9))]
    if name == "random_small_batch":
        count = params.get("count", 50)
        seed = params.get("seed", 0)
        graphs = []
        for i in range(count):
            cfg = GeneratorConfig(target_leaves=3 + i % 4, max_degree=5, seed=seed + i)
            graphs.append(gen_random_halin(cfg))
        return graphs
    raise UnknownFamilyError(f"unknown family {name!r}")
