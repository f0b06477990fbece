"""Multiplicity campaign: psi sends at most two points of a rich cubic to one dual line."""

import logging
import math

from cubiclab.curves import random_irreducible_cubic, rational_points
from cubiclab.dual import (
    Degenerate,
    DualLine,
    Flat2,
    dual_incidence,
    flat_of,
    line_multiplicities,
    phi,
    psi,
)
from cubiclab.experiments.campaigns.base import (
    BaseCampaign,
    CampaignParams,
    CheckRow,
    trial_rng,
)
from cubiclab.experiments.campaigns.draws import choose
from cubiclab.field import PrimeModulus

logger = logging.getLogger(__name__)

# Cubic draws per trial before settling for a curve with fewer than eight points
_CURVE_ATTEMPTS = 20


class MultiplicityCampaign(BaseCampaign):
    """Map the points of an irreducible cubic through the flat of seven of them."""

    name = "multiplicity"
    description = "psi has multiplicity at most two on the points of a cubic"
    min_p = 5

    def run_trial(self, params: CampaignParams, trial: int) -> list[CheckRow]:
        modulus = PrimeModulus(params.p)
        rng = trial_rng(params.seed, trial)

        for _ in range(_CURVE_ATTEMPTS):
            cubic = random_irreducible_cubic(rng, modulus)
            on_cubic = rational_points(cubic)
            if len(on_cubic) >= 8:
                break
        else:
            return [CheckRow(trial, "rich-curve", True, "no cubic with 8 points drawn")]

        chosen = choose(on_cubic, 7, rng)
        flat = flat_of(chosen)
        if not isinstance(flat, Flat2):
            return [CheckRow(trial, "flat", False, f"rank {flat.rank} for {cubic}")]

        images = [psi(q, flat) for q in on_cubic if q not in chosen]
        degenerate = [image for image in images if isinstance(image, Degenerate)]
        lines = [image for image in images if isinstance(image, DualLine)]
        rows = [CheckRow(trial, "no-degenerate", not degenerate, f"{len(degenerate)} degenerate")]

        multiplicity = max(line_multiplicities(lines).values(), default=0)
        rows.append(CheckRow(trial, "max-multiplicity", multiplicity <= 2, str(multiplicity)))

        dual_point = phi(cubic)
        met = {dl.covector for dl in lines if dual_incidence(dual_point, dl, flat)}
        needed = math.ceil(len(images) / 2)
        rows.append(
            CheckRow(
                trial,
                "dual-richness",
                len(met) >= needed,
                f"{len(met)} distinct lines, need {needed}",
            )
        )
        return rows


multiplicity_campaign = MultiplicityCampaign()
