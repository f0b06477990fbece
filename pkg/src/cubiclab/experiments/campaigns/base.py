"""Base campaign class with shared trial orchestration."""

import csv
import logging
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Protocol

import numpy as np

from cubiclab.env import get_settings, worker_pool
from cubiclab.errors import InvalidInputError
from cubiclab.experiments.progress import (
    ProgressReporter,
    ProgressStep,
    ProgressTracker,
    StepStatus,
)
from cubiclab.field import PrimeModulus

logger = logging.getLogger(__name__)

CHECK_CSV_HEADER = ("trial", "check", "ok", "detail")


@dataclass(frozen=True)
class CampaignParams:
    """Parameters shared by every campaign.

    Attributes:
        p: Prime field size
        trials: Number of seeded trials
        seed: Master seed; trial t uses the generator seeded with (seed, t)
        threads: Worker processes (defaults to the configured engine threads)
    """

    p: int
    trials: int
    seed: int
    threads: int | None = None

    def __post_init__(self) -> None:
        if self.trials < 0:
            raise InvalidInputError(f"trials must be nonnegative, got {self.trials}")
        PrimeModulus(self.p)


class TrialRow(Protocol):
    """Anything a campaign trial reports: its trial index and whether it held."""

    @property
    def trial(self) -> int: ...

    @property
    def ok(self) -> bool: ...


@dataclass(frozen=True)
class CheckRow:
    """Outcome of one check in one trial."""

    trial: int
    check: str
    ok: bool
    detail: str = ""


@dataclass
class CampaignSummary:
    """Result of a campaign run.

    Attributes:
        name: Campaign name
        params: The parameters the campaign ran with
        header: CSV header of the rows
        rows: CSV rows in trial order
        checks: Number of checks performed
        violations: Descriptions of failed checks
        notes: Extra measurements worth reporting (maxima, skipped draws)
    """

    name: str
    params: CampaignParams
    header: tuple[str, ...] = CHECK_CSV_HEADER
    rows: list[list[Any]] = field(default_factory=list)
    checks: int = 0
    violations: list[str] = field(default_factory=list)
    notes: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def write_csv(self, path: Path) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(self.header)
            writer.writerows(self.rows)

    def to_context(self) -> dict[str, Any]:
        """Values for the campaign summary template."""
        return {"summary": self, "params": self.params}


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """The generator of one trial, derived from the master seed by counter."""
    return np.random.default_rng([seed, trial])


def _run_block(args: tuple[str, CampaignParams, list[int]]) -> list[TrialRow]:
    from cubiclab.experiments.campaigns import get_campaign

    name, params, trials = args
    campaign = get_campaign(name)
    return [row for trial in trials for row in campaign.run_trial(params, trial)]


class BaseCampaign(ABC):
    """Base class for verification campaigns."""

    name: str = ""
    description: str = ""
    header: tuple[str, ...] = CHECK_CSV_HEADER
    min_p: int = 2

    def get_progress_steps(self) -> list[ProgressStep]:
        """Get the progress steps for this campaign."""
        return [ProgressStep("Run trials"), ProgressStep("Summarize")]

    @abstractmethod
    def run_trial(self, params: CampaignParams, trial: int) -> list[TrialRow]:
        """Run the checks of one trial with the generator trial_rng(seed, trial)."""
        pass

    def validate(self, params: CampaignParams) -> None:
        """Reject field sizes outside the campaign's range."""
        if params.p < self.min_p:
            raise InvalidInputError(
                f"{self.name} campaign needs p >= {self.min_p}, got {params.p}"
            )

    def run_trials(self, params: CampaignParams) -> list[TrialRow]:
        """All trials, partitioned over worker processes when threads > 1."""
        workers = get_settings().engine.threads if params.threads is None else params.threads
        if workers <= 1 or params.trials < 2:
            return _run_block((self.name, params, list(range(params.trials))))

        blocks = [
            [int(t) for t in block]
            for block in np.array_split(np.arange(params.trials), workers)
            if block.size
        ]
        with worker_pool(len(blocks)) as executor:
            results = executor.map(_run_block, [(self.name, params, block) for block in blocks])
            return [row for rows in results for row in rows]

    def csv_row(self, row: Any) -> list[Any]:
        """CSV fields of one trial row under the campaign header."""
        return [row.trial, row.check, "true" if row.ok else "false", row.detail]

    def describe(self, row: Any) -> str:
        return f"trial {row.trial}: {row.check} failed {row.detail}".rstrip()

    def summarize(self, params: CampaignParams, rows: list[TrialRow]) -> CampaignSummary:
        """Collect trial rows into a summary."""
        summary = CampaignSummary(
            name=self.name, params=params, header=self.header, checks=len(rows)
        )
        for row in rows:
            summary.rows.append(self.csv_row(row))
            if not row.ok:
                summary.violations.append(self.describe(row))
        summary.notes = self.notes(rows)
        return summary

    def notes(self, rows: list[TrialRow]) -> dict[str, Any]:
        """Number of rows per check name."""
        counts: dict[str, int] = {}
        for row in rows:
            check = getattr(row, "check", "rows")
            counts[check] = counts.get(check, 0) + 1
        return dict(sorted(counts.items()))

    def execute(self, params: CampaignParams, show_progress: bool = True) -> CampaignSummary:
        """Run the campaign with progress on stderr.

        Args:
            params: Campaign parameters
            show_progress: Print the step checklist to stderr

        Returns:
            The campaign summary
        """
        self.validate(params)
        tracker = ProgressTracker(
            command=f"verify {self.name}",
            run_id=f"p={params.p} trials={params.trials} seed={params.seed}",
            steps=self.get_progress_steps(),
        )
        progress = ProgressReporter(tracker, enabled=show_progress)
        progress.start()
        logger.info(f"Campaign {self.name} started: {tracker.run_id}")

        step = 0
        try:
            progress.update(step, StepStatus.RUNNING)
            start = time.perf_counter()
            rows = self.run_trials(params)
            progress.update(step, StepStatus.COMPLETED, time.perf_counter() - start)

            step = 1
            progress.update(step, StepStatus.RUNNING)
            start = time.perf_counter()
            summary = self.summarize(params, rows)
            status = StepStatus.COMPLETED if summary.ok else StepStatus.FAILED
            progress.update(step, status, time.perf_counter() - start)
        except Exception as e:
            logger.exception(f"Campaign {self.name} failed: {e}")
            progress.fail(str(e))
            raise

        if summary.ok:
            progress.complete()
        else:
            progress.fail(f"{len(summary.violations)} violations")
        logger.info(
            f"Campaign {self.name} finished: {summary.checks} checks, "
            f"{len(summary.violations)} violations"
        )
        return summary
