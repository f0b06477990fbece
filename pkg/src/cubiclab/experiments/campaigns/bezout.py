"""Bezout campaign, delegating to the brute-force intersection oracle."""

from typing import Any

from cubiclab import oracle
from cubiclab.env import get_settings
from cubiclab.errors import GuardExceededError
from cubiclab.experiments.campaigns.base import BaseCampaign, CampaignParams, TrialRow
from cubiclab.oracle import BEZOUT_CSV_HEADER, BezoutRow


class BezoutCampaign(BaseCampaign):
    """Intersection sizes of random cubic/cubic, line/cubic and conic/cubic pairs."""

    name = "bezout"
    description = "two irreducible cubics meet in at most nine points"
    header = BEZOUT_CSV_HEADER

    def validate(self, params: CampaignParams) -> None:
        super().validate(params)
        guard = get_settings().guards.bezout_max_p
        if params.p > guard:
            raise GuardExceededError(
                f"refusing Bezout campaign over GF({params.p}) (guard p <= {guard})"
            )

    def run_trial(self, params: CampaignParams, trial: int) -> list[TrialRow]:
        return list(oracle.bezout_trial(params.p, params.seed, trial))

    def run_trials(self, params: CampaignParams) -> list[TrialRow]:
        summary = oracle.bezout_campaign(params.p, params.trials, params.seed, params.threads)
        return list(summary.rows)

    def csv_row(self, row: BezoutRow) -> list[Any]:
        ok = "true" if row.ok else "false"
        return [row.trial, row.kind.value, row.intersection_size, row.cap, ok]

    def describe(self, row: BezoutRow) -> str:
        size = row.intersection_size
        return f"trial {row.trial}: {row.kind.value} pair meets in {size} > {row.cap}"

    def notes(self, rows: list[TrialRow]) -> dict[str, Any]:
        """Largest intersection observed per pair kind."""
        observed: dict[str, int] = {}
        for row in rows:
            if isinstance(row, BezoutRow):
                label = f"max {row.kind.value}"
                observed[label] = max(observed.get(label, 0), row.intersection_size)
        return observed


bezout_campaign = BezoutCampaign()
