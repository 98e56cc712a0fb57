"""Randomized sweep: many integer triangles through the full check suite."""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .exact_geom import Point, signed_area
from .verify import ALL_INCLUDES, SKIPPED, run_all

Triangle = tuple[tuple[int, int], tuple[int, int], tuple[int, int]]


@dataclass
class BatchSummary:
    count: int
    seed: int
    coordinate_bound: int
    failures: list[tuple[Triangle, list[str]]] = field(default_factory=list)
    elapsed: float = 0.0
    checks_run: int = 0
    checks_skipped: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures


def random_triangles(count: int, seed: int, bound: int) -> list[Triangle]:
    """``count`` non-collinear triangles, coordinates uniform in [-bound, bound].

    PCG64 seeded with ``seed``: the same arguments always give the same list.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if bound < 2:
        raise ValueError("bound must be >= 2")
    rng = np.random.Generator(np.random.PCG64(seed))
    out: list[Triangle] = []
    while len(out) < count:
        xs = [int(v) for v in rng.integers(-bound, bound, size=6, endpoint=True)]
        a, b, c = (xs[0], xs[1]), (xs[2], xs[3]), (xs[4], xs[5])
        if signed_area(Point(*a), Point(*b), Point(*c)) == 0:
            continue
        out.append((a, b, c))
    return out


def _verify_one(tri: Triangle, include=ALL_INCLUDES) -> tuple[list[str], int, int]:
    try:
        report = run_all(*(Point(*p) for p in tri), include=include)
    except Exception as exc:  # a crash is a failure to report, not to hide
        return [f"exception:{type(exc).__name__}:{exc}"], 0, 0
    skipped = sum(1 for c in report.checks if c.status == SKIPPED)
    return report.failures(), len(report.checks) - skipped, skipped


def batch_random(count: int, seed: int, bound: int, workers: int = 1, include=ALL_INCLUDES) -> BatchSummary:
    start = time.perf_counter()
    triangles = random_triangles(count, seed, bound)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_verify_one, triangles, [include] * len(triangles), chunksize=32))
    else:
        results = [_verify_one(t, include) for t in triangles]
    summary = BatchSummary(count, seed, bound)
    for tri, (failed, run, skipped) in zip(triangles, results):
        if failed:
            summary.failures.append((tri, failed))
        summary.checks_run += run
        summary.checks_skipped += skipped
    summary.elapsed = time.perf_counter() - start
    return summary


def summary_dict(summary: BatchSummary) -> dict:
    return {
        "count": summary.count,
        "seed": summary.seed,
        "bound": summary.coordinate_bound,
        "checks_run": summary.checks_run,
        "checks_skipped": summary.checks_skipped,
        "failures": [
            {"triangle": [list(p) for p in tri], "checks": names} for tri, names in summary.failures
        ],
        "all_pass": summary.ok,
        "elapsed_seconds": round(summary.elapsed, 3),
    }
