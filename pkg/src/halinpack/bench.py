"""Scaling benchmark: empirical check that coloring time grows linearly.

One fresh instance per size; the coloring runs ``repeats`` times and the
repeat with the median wall time provides the record, so its stage splits
sum below the total.  Verification is timed separately and never enters the
linearity fit.  Runs are strictly sequential.
"""

from __future__ import annotations

import gc
import time
from dataclasses import dataclass
from types import ModuleType
from typing import Sequence

import numpy as np

from .colorer import STANDARD_CLASSES, run_pipeline
from .generator import GeneratorConfig, gen_random_halin
from .verifier import verify_packing

CSV_HEADER = "n,seed,total_us,tree_us,recolor_us,conflicts_us,verify_us"


@dataclass(frozen=True)
class BenchRecord:
    n_total: int
    seed: int
    total_us: int
    tree_us: int
    recolor_us: int
    conflicts_us: int
    verify_us: int


def run_scaling(
    sizes: Sequence[int],
    repeats: int = 5,
    seed: int = 0,
    *,
    backend: str | ModuleType | None = None,
    max_degree: int = 5,
) -> list[BenchRecord]:
    """Generate, color, and verify one instance per size.

    Sizes are approximate vertex totals and must be ascending; repeats must
    be at least 3.  A failed coloring or verification aborts with the failing
    seed in the message.
    """
    if list(sizes) != sorted(sizes) or len(sizes) == 0:
        raise ValueError("sizes must be a non-empty ascending list")
    if repeats < 3:
        raise ValueError(f"repeats must be at least 3, got {repeats}")

    graphs = []
    for idx, size in enumerate(sizes):
        inst_seed = seed + idx
        cfg = GeneratorConfig(
            target_leaves=max(3, (2 * int(size)) // 3),
            max_degree=max_degree,
            seed=inst_seed,
        )
        try:
            graphs.append((inst_seed, gen_random_halin(cfg)))
        except Exception as e:
            raise RuntimeError(f"generation failed for seed {inst_seed}: {e}") from e

    # Repeats interleave across sizes (still strictly sequential) so one
    # scheduler burst cannot poison a single size's whole sample.
    timings: list[list[dict[str, int]]] = [[] for _ in graphs]
    runs: list = [None] * len(graphs)
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for inst_seed, g in graphs:
            run_pipeline(g, backend=backend)  # warm-up, untimed
        for _ in range(repeats):
            for gi, (inst_seed, g) in enumerate(graphs):
                try:
                    run = run_pipeline(g, backend=backend)
                except Exception as e:
                    raise RuntimeError(f"coloring failed for seed {inst_seed}: {e}") from e
                runs[gi] = run
                timings[gi].append(run.stage_ns)
    finally:
        if gc_was_enabled:
            gc.enable()

    records: list[BenchRecord] = []
    for gi, (inst_seed, g) in enumerate(graphs):
        run = runs[gi]
        # the run with the median wall time, so stage splits stay consistent
        # with the reported total
        median_run = sorted(timings[gi], key=lambda t: t["total"])[repeats // 2]
        t0 = time.perf_counter_ns()
        report = verify_packing(g, run.coloring, STANDARD_CLASSES, backend=backend)
        verify_ns = time.perf_counter_ns() - t0
        if not report.ok:
            raise RuntimeError(
                f"verification failed for seed {inst_seed}: {len(report.violations)} violations"
            )
        records.append(
            BenchRecord(
                n_total=g.n_total,
                seed=inst_seed,
                total_us=int(median_run["total"] // 1000),
                tree_us=int(median_run["tree"] // 1000),
                recolor_us=int(median_run["recolor"] // 1000),
                conflicts_us=int(median_run["conflicts"] // 1000),
                verify_us=int(verify_ns // 1000),
            )
        )
    return records


def emit_csv(records: Sequence[BenchRecord]) -> str:
    """Deterministic CSV; header only for empty input."""
    lines = [CSV_HEADER]
    lines.extend(
        f"{r.n_total},{r.seed},{r.total_us},{r.tree_us},{r.recolor_us},{r.conflicts_us},{r.verify_us}"
        for r in records
    )
    return "\n".join(lines) + "\n"


def parse_csv(text: str) -> list[BenchRecord]:
    """Inverse of emit_csv on the numeric fields."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError("bad benchmark CSV header")
    out = []
    for line in lines[1:]:
        n, s, total, tree, recolor, conflicts, verify = (int(t) for t in line.split(","))
        out.append(BenchRecord(n, s, total, tree, recolor, conflicts, verify))
    return out


def linear_fit_r2(records: Sequence[BenchRecord]) -> float:
    """Coefficient of determination of the least-squares time-vs-n line."""
    x = np.array([r.n_total for r in records], dtype=np.float64)
    y = np.array([r.total_us for r in records], dtype=np.float64)
    slope, intercept = np.polyfit(x, y, 1)
    residuals = y - (slope * x + intercept)
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    if ss_tot == 0.0:
        return 1.0
    return 1.0 - float(np.sum(residuals**2)) / ss_tot


def doubling_ratios(records: Sequence[BenchRecord]) -> list[float]:
    """Successive median-time ratios; near 2.0 for linear scaling on doubled sizes."""
    times = [max(r.total_us, 1) for r in records]
    return [times[i + 1] / times[i] for i in range(len(times) - 1)]
