"""Lemma campaign: seven points on an irreducible cubic span a 2-flat of cubics.

Two side facts run as separate checks. If S contains four collinear points,
or seven points of S lie on a conic, no absolutely irreducible cubic passes
through S, so every sampled member of the solution space is reducible or of
lower degree.
"""

import logging

import numpy as np

from cubiclab.curves import (
    AffinePoint,
    random_irreducible_conic,
    random_irreducible_cubic,
    rational_points,
)
from cubiclab.dual import Flat2, flat_of, intersect_hyperplanes
from cubiclab.experiments.campaigns.base import (
    BaseCampaign,
    CampaignParams,
    CheckRow,
    trial_rng,
)
from cubiclab.experiments.campaigns.draws import (
    choose,
    planted_points,
    solution_members,
)
from cubiclab.field import PrimeModulus

logger = logging.getLogger(__name__)

# Members of each solution space classified per trial
MEMBER_SAMPLES = 4


class LemmaCampaign(BaseCampaign):
    """Rank and irreducibility checks on point sets of three shapes."""

    name = "lemma"
    description = "seven points on an irreducible cubic give a 2-flat"
    min_p = 11

    def run_trial(self, params: CampaignParams, trial: int) -> list[CheckRow]:
        modulus = PrimeModulus(params.p)
        rng = trial_rng(params.seed, trial)
        rows = []

        cubic = random_irreducible_cubic(rng, modulus)
        on_cubic = rational_points(cubic)
        if len(on_cubic) >= 7:
            flat = flat_of(choose(on_cubic, 7, rng))
            rows.append(CheckRow(trial, "cubic-seven-flat", isinstance(flat, Flat2), str(cubic)))
        else:
            logger.debug(f"Trial {trial}: {cubic} has only {len(on_cubic)} points")

        four_line = planted_points(7, 4, modulus, rng)
        rows.extend(self._no_irreducible_member(trial, "four-collinear", four_line, rng))

        conic = random_irreducible_conic(rng, modulus)
        on_conic = rational_points(conic)
        if len(on_conic) >= 7:
            seven_conic = choose(on_conic, 7, rng)
            rows.extend(self._no_irreducible_member(trial, "seven-on-conic", seven_conic, rng))
        else:
            logger.debug(f"Trial {trial}: {conic} has only {len(on_conic)} points")
        return rows

    @staticmethod
    def _no_irreducible_member(
        trial: int, check: str, points: list[AffinePoint], rng: np.random.Generator
    ) -> list[CheckRow]:
        modulus = points[0].modulus
        space = intersect_hyperplanes(points)
        return [
            CheckRow(trial, check, not member.is_irreducible_cubic, str(member))
            for member in solution_members(space, modulus, MEMBER_SAMPLES, rng)
        ]


lemma_campaign = LemmaCampaign()
