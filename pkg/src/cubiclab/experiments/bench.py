"""Throughput of the counting engine across thread counts."""

import csv
import logging
import time
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from cubiclab.curves import CurveCoeffs
from cubiclab.errors import LabError
from cubiclab.experiments.instances import uniform_points
from cubiclab.field import PrimeModulus
from cubiclab.incidence import CurveSet, PointSet, count_incidences

logger = logging.getLogger(__name__)

BENCH_CSV_HEADER = ("size", "threads", "incidences", "seconds", "pairs_per_second")


@dataclass(frozen=True)
class BenchRow:
    """Timing of one count_incidences call on a |P| = |C| = size instance."""

    size: int
    threads: int
    incidences: int
    seconds: float

    @property
    def pairs_per_second(self) -> float:
        if self.seconds <= 0:
            return float("inf")
        return self.size * self.size / self.seconds


def _random_curves(
    count: int, modulus: PrimeModulus, rng: np.random.Generator
) -> list[CurveCoeffs]:
    curves: dict[CurveCoeffs, None] = {}
    while len(curves) < count:
        values = tuple(int(v) for v in rng.integers(0, modulus.p, size=10))
        if any(values):
            curves.setdefault(CurveCoeffs(values, modulus), None)
    return list(curves)


def bench(sizes: Sequence[int], p: int, threads: Sequence[int], seed: int) -> list[BenchRow]:
    """Time the counting engine on seeded uniform instances.

    Curves are uniform coefficient vectors; irreducibility plays no part in
    the engine's cost, so they are not classified.

    Args:
        sizes: Values of |P| = |C|
        p: Prime field size
        threads: Thread counts to compare on every size
        seed: Instance seed

    Returns:
        One row per (size, threads) pair

    Raises:
        LabError: If two thread counts disagree on a count
    """
    modulus = PrimeModulus(p)
    rows = []
    for size in sizes:
        rng = np.random.default_rng([seed, size])
        points = PointSet(tuple(uniform_points(size, modulus, rng)), modulus)
        curves = CurveSet(tuple(_random_curves(size, modulus, rng)), modulus)

        counts: set[int] = set()
        for workers in threads:
            start = time.perf_counter()
            count = count_incidences(points, curves, workers)
            row = BenchRow(size, workers, count, time.perf_counter() - start)
            logger.info(f"size={size} threads={workers}: {row.pairs_per_second:.3e} pairs/s")
            rows.append(row)
            counts.add(count)

        if len(counts) > 1:
            raise LabError(f"thread counts disagree on size {size}: {sorted(counts)}")
    return rows


def write_bench_rows(path: Path, rows: Sequence[BenchRow]) -> None:
    """Write timings under BENCH_CSV_HEADER."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(BENCH_CSV_HEADER)
        for row in rows:
            seconds = f"{row.seconds:.6f}"
            rate = f"{row.pairs_per_second:.6e}"
            writer.writerow([row.size, row.threads, row.incidences, seconds, rate])
