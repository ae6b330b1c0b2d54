"""Random completely reducible curves and desk-scale timing runs."""

from __future__ import annotations

import random
import statistics
import time
from dataclasses import dataclass

from .curve import Curve, singular_fibers
from .errors import DuplicateComponent, NumericalFailure
from .tracker import global_monodromy

COEFF_RANGE = 5
MIN_FIBER_GAP = 1e-3


def component_degrees(total: int, n: int = 3) -> list[int]:
    """One component of degree ``total - (n - 1)`` and the rest lines."""
    if total < n:
        raise ValueError(f"total degree {total} too small for {n} components")
    return [total - (n - 1)] + [1] * (n - 1)


def random_component(rng: random.Random, degree: int) -> list[int]:
    coeffs = [rng.randint(-COEFF_RANGE, COEFF_RANGE) for _ in range(degree)]
    lead = 0
    while lead == 0:
        lead = rng.randint(-COEFF_RANGE, COEFF_RANGE)
    return coeffs + [lead]


def _fibers_ok(c: Curve) -> bool:
    try:
        xs = [f.x for f in singular_fibers(c)]
    except NumericalFailure:
        return False
    return all(abs(a - b) >= MIN_FIBER_GAP for i, a in enumerate(xs) for b in xs[i + 1:])


def random_curve(rng: random.Random, degrees: list[int], max_tries: int = 1000) -> Curve:
    """Curve with integer components of the given degrees, resampled until well separated."""
    for _ in range(max_tries):
        comps = [random_component(rng, d) for d in degrees]
        try:
            c = Curve.from_exact(comps)
        except DuplicateComponent:
            continue
        if _fibers_ok(c):
            return c
    raise RuntimeError("could not sample a well-separated curve")


@dataclass(frozen=True)
class BenchRow:
    degree: int
    count: int
    mean_ms: float
    max_ms: float


def run_bench(degree: int, count: int, seed: int = 0, n: int = 3) -> tuple[BenchRow, list[Curve], list[list[str]]]:
    """Time ``count`` global monodromy runs on random curves of total ``degree``."""
    rng = random.Random(seed)
    degrees = component_degrees(degree, n)
    curves = [random_curve(rng, degrees) for _ in range(count)]
    times, words = [], []
    for c in curves:
        start = time.perf_counter()
        results = global_monodromy(c)
        times.append((time.perf_counter() - start) * 1000)
        words.append([str(r.word) for r in results])
    row = BenchRow(degree, count, statistics.fmean(times), max(times))
    return row, curves, words
