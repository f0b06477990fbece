"""Proposition campaign: 7 or 8 points in general enough position impose independent conditions."""

import logging

from cubiclab.dual import check_independent_conditions, max_collinear, on_common_conic
from cubiclab.experiments.campaigns.base import (
    BaseCampaign,
    CampaignParams,
    CheckRow,
    trial_rng,
)
from cubiclab.experiments.campaigns.draws import planted_points
from cubiclab.field import PrimeModulus

logger = logging.getLogger(__name__)

# Largest number of collinear points planted into a draw
_MAX_PLANTED = 5


class PropositionCampaign(BaseCampaign):
    """Rank of seeded 7- and 8-point sets, filtered by the general position hypotheses.

    Each draw plants between zero and five collinear points so the filters
    see both accepted and rejected sets. Rejected draws are recorded as
    passing rows with the reason in the detail column.
    """

    name = "proposition"
    description = "point sets with no five collinear impose independent conditions"
    min_p = 5

    def run_trial(self, params: CampaignParams, trial: int) -> list[CheckRow]:
        modulus = PrimeModulus(params.p)
        rng = trial_rng(params.seed, trial)
        rows = []

        for size in (7, 8):
            planted = int(rng.integers(0, _MAX_PLANTED + 1))
            points = planted_points(size, planted, modulus, rng)
            check = f"rank-{size}"

            collinear = max_collinear(points)
            if collinear >= 5:
                rows.append(CheckRow(trial, f"{check}-filtered", True, f"{collinear} collinear"))
                continue
            if size == 8 and on_common_conic(points):
                rows.append(CheckRow(trial, f"{check}-filtered", True, "on a common conic"))
                continue

            independent = check_independent_conditions(points)
            detail = " ".join(str(q) for q in points)
            rows.append(CheckRow(trial, check, independent, detail))
            if not independent:
                logger.warning(f"Trial {trial}: dependent conditions from {detail}")
        return rows


proposition_campaign = PropositionCampaign()
