"""Randomized check of the rational Bezout caps for cubic, line and conic partners."""

import csv
import logging
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

import numpy as np

from cubiclab.curves import random_irreducible_conic, random_irreducible_cubic, random_line
from cubiclab.env import get_settings, worker_pool
from cubiclab.errors import GuardExceededError, InvalidInputError
from cubiclab.field import PrimeModulus
from cubiclab.oracle.brute import intersect_curves

logger = logging.getLogger(__name__)

BEZOUT_CSV_HEADER = ("trial", "kind", "intersection_size", "cap", "ok")


class PairKind(Enum):
    """Pair types sampled by the campaign, valued by their CSV label."""

    CUBIC_CUBIC = "cubic/cubic"
    LINE_CUBIC = "line/cubic"
    CONIC_CUBIC = "conic/cubic"

    @property
    def cap(self) -> int:
        return {"cubic/cubic": 9, "line/cubic": 3, "conic/cubic": 6}[self.value]


@dataclass(frozen=True)
class BezoutRow:
    """One sampled pair.

    Attributes:
        trial: Trial index (the per-trial seed is (seed, trial))
        kind: Pair type
        intersection_size: Common affine GF(p)-points
        cap: The Bezout cap for the pair type
    """

    trial: int
    kind: PairKind
    intersection_size: int
    cap: int

    @property
    def ok(self) -> bool:
        return self.intersection_size <= self.cap


@dataclass
class BezoutSummary:
    """Result of a Bezout campaign.

    Attributes:
        p: Field size
        trials: Number of trials (one pair of each kind per trial)
        seed: Master seed
        rows: One row per sampled pair, in (trial, kind) order
    """

    p: int
    trials: int
    seed: int
    rows: list[BezoutRow] = field(default_factory=list)

    @property
    def max_observed(self) -> dict[PairKind, int]:
        observed = {kind: 0 for kind in PairKind}
        for row in self.rows:
            observed[row.kind] = max(observed[row.kind], row.intersection_size)
        return observed

    @property
    def violations(self) -> list[BezoutRow]:
        return [row for row in self.rows if not row.ok]

    @property
    def ok(self) -> bool:
        return not self.violations


def bezout_trial(p: int, seed: int, trial: int) -> list[BezoutRow]:
    """Sample one pair of each kind from the generator seeded with (seed, trial)."""
    modulus = PrimeModulus(p)
    rng = np.random.default_rng([seed, trial])

    cubic = random_irreducible_cubic(rng, modulus)
    other = random_irreducible_cubic(rng, modulus)
    while other == cubic:
        other = random_irreducible_cubic(rng, modulus)

    partners = {
        PairKind.CUBIC_CUBIC: other,
        PairKind.LINE_CUBIC: random_line(rng, modulus),
        PairKind.CONIC_CUBIC: random_irreducible_conic(rng, modulus),
    }
    rows = []
    for kind, partner in partners.items():
        record = intersect_curves(partner, cubic)
        rows.append(BezoutRow(trial, kind, record.size, kind.cap))
        if record.size > kind.cap:
            logger.warning(f"Trial {trial}: {partner} meets {cubic} in {record.size} points")
    return rows


def _trial_block(args: tuple[int, int, list[int]]) -> list[BezoutRow]:
    p, seed, trials = args
    return [row for trial in trials for row in bezout_trial(p, seed, trial)]


def bezout_campaign(p: int, trials: int, seed: int, threads: int | None = None) -> BezoutSummary:
    """Intersect random pairs of each kind and compare against their caps.

    Args:
        p: Prime field size, within the Bezout guard
        trials: Number of trials
        seed: Master seed
        threads: Worker processes (defaults to the configured engine threads)

    Returns:
        The summary; rows do not depend on threads

    Raises:
        GuardExceededError: If p exceeds the Bezout guard
        InvalidInputError: If trials is negative
    """
    guard = get_settings().guards.bezout_max_p
    if p > guard:
        raise GuardExceededError(f"refusing Bezout campaign over GF({p}) (guard p <= {guard})")
    if trials < 0:
        raise InvalidInputError(f"trials must be nonnegative, got {trials}")
    PrimeModulus(p)  # validates p

    workers = get_settings().engine.threads if threads is None else threads
    summary = BezoutSummary(p=p, trials=trials, seed=seed)
    logger.info(f"Bezout campaign over GF({p}): {trials} trials, seed {seed}")

    if workers <= 1 or trials < 2:
        summary.rows = _trial_block((p, seed, list(range(trials))))
    else:
        blocks = [
            [int(t) for t in block]
            for block in np.array_split(np.arange(trials), workers)
            if block.size
        ]
        with worker_pool(len(blocks)) as executor:
            results = executor.map(_trial_block, [(p, seed, block) for block in blocks])
            summary.rows = [row for rows in results for row in rows]

    observed = {kind.value: size for kind, size in summary.max_observed.items()}
    logger.info(
        f"Bezout campaign finished: max observed {observed}, "
        f"{len(summary.violations)} violations"
    )
    return summary


def write_bezout_rows(path: Path, rows: list[BezoutRow]) -> None:
    """Write campaign rows under BEZOUT_CSV_HEADER."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(BEZOUT_CSV_HEADER)
        for row in rows:
            writer.writerow(
                [
                    row.trial,
                    row.kind.value,
                    row.intersection_size,
                    row.cap,
                    "true" if row.ok else "false",
                ]
            )
