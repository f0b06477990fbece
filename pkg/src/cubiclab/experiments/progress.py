"""Step-by-step progress for long runs, printed to stderr."""

import sys
from dataclasses import dataclass, field
from enum import Enum
from typing import TextIO


class StepStatus(Enum):
    """Status of a progress step.

    Values:
        PENDING: Step has not started yet
        RUNNING: Step is currently executing
        COMPLETED: Step finished successfully
        FAILED: Step raised or found violations
    """

    PENDING = "pending"
    RUNNING = "running"
    COMPLETED = "completed"
    FAILED = "failed"


@dataclass
class ProgressStep:
    """A step in the progress tracker.

    Attributes:
        name: Human-readable step name (e.g., "Run trials")
        status: Current status of this step
        duration_seconds: Wall time of the step once finished
    """

    name: str
    status: StepStatus = StepStatus.PENDING
    duration_seconds: float | None = None


@dataclass
class ProgressTracker:
    """Tracks the steps of one run and formats them as a checklist.

    Attributes:
        command: The command or campaign being executed
        run_id: Identifier of the run (campaign name and seed)
        steps: Progress steps with their statuses
        error_message: Error message if the run failed
    """

    command: str
    run_id: str
    steps: list[ProgressStep] = field(default_factory=list)
    error_message: str | None = None

    @staticmethod
    def _duration(step: ProgressStep) -> str:
        return f" ({step.duration_seconds:.2f}s)" if step.duration_seconds is not None else ""

    def format(self) -> str:
        """Checklist for a run in progress."""
        lines = [f"{self.command} running [{self.run_id}]"]
        for step in self.steps:
            if step.status == StepStatus.COMPLETED:
                lines.append(f"  [x] {step.name}{self._duration(step)}")
            elif step.status == StepStatus.RUNNING:
                lines.append(f"  [ ] {step.name} <- running")
            elif step.status == StepStatus.FAILED:
                lines.append(f"  [ ] {step.name} <- failed")
            else:
                lines.append(f"  [ ] {step.name}")
        return "\n".join(lines)

    def format_completed(self) -> str:
        """Checklist for a run that finished."""
        lines = [f"{self.command} completed [{self.run_id}]"]
        for step in self.steps:
            if step.status == StepStatus.FAILED:
                lines.append(f"  [ ] {step.name} <- failed")
            else:
                lines.append(f"  [x] {step.name}{self._duration(step)}")
        return "\n".join(lines)

    def format_failed(self) -> str:
        """Checklist for a failed run, with the error message."""
        lines = [f"{self.command} failed [{self.run_id}]"]
        for step in self.steps:
            if step.status == StepStatus.COMPLETED:
                lines.append(f"  [x] {step.name}{self._duration(step)}")
            elif step.status in (StepStatus.RUNNING, StepStatus.FAILED):
                lines.append(f"  [ ] {step.name} <- failed")
            else:
                lines.append(f"  [ ] {step.name}")
        if self.error_message:
            lines.append(f"  error: {self.error_message}")
        return "\n".join(lines)


class ProgressReporter:
    """Writes tracker snapshots to a text stream (stderr by default).

    Nothing is written to stdout, so report output stays byte-deterministic.
    """

    def __init__(
        self, tracker: ProgressTracker, stream: TextIO | None = None, enabled: bool = True
    ):
        self.tracker = tracker
        self.stream = stream
        self.enabled = enabled

    def _emit(self, text: str) -> None:
        if self.enabled:
            print(text, file=self.stream or sys.stderr, flush=True)

    def start(self) -> None:
        self._emit(self.tracker.format())

    def update(self, index: int, status: StepStatus, duration: float | None = None) -> None:
        """Set a step's status and print the checklist."""
        step = self.tracker.steps[index]
        step.status = status
        if duration is not None:
            step.duration_seconds = duration
        self._emit(self.tracker.format())

    def complete(self) -> None:
        self._emit(self.tracker.format_completed())

    def fail(self, error: str) -> None:
        self.tracker.error_message = error
        self._emit(self.tracker.format_failed())
