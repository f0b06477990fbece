"""Duality campaign: q lies on a curve of the flat iff phi(curve) lies on psi(q)."""

import logging

from cubiclab.curves import incident, rational_points
from cubiclab.dual import Degenerate, Flat2, dual_incidence, flat_of, flat_point, phi, psi
from cubiclab.experiments.campaigns.base import (
    BaseCampaign,
    CampaignParams,
    CheckRow,
    trial_rng,
)
from cubiclab.experiments.campaigns.draws import choose, planted_points
from cubiclab.field import PrimeModulus

logger = logging.getLogger(__name__)

# Draws of S before a trial gives up on finding a 2-flat
_FLAT_ATTEMPTS = 50


class DualityCampaign(BaseCampaign):
    """Compare dual incidence with direct evaluation on random flats."""

    name = "duality"
    description = "q in gamma iff phi(gamma) lies on psi(q)"

    def run_trial(self, params: CampaignParams, trial: int) -> list[CheckRow]:
        modulus = PrimeModulus(params.p)
        rng = trial_rng(params.seed, trial)

        flat = None
        for _ in range(_FLAT_ATTEMPTS):
            candidate = flat_of(planted_points(7, 0, modulus, rng))
            if isinstance(candidate, Flat2):
                flat = candidate
                break
        if flat is None:
            return [CheckRow(trial, "flat", True, "no 2-flat drawn")]

        t = [0, 0, 0]
        while not any(t):
            t = [int(v) for v in rng.integers(0, params.p, size=3)]
        curve = flat_point(flat, t)

        rows = [
            CheckRow(
                trial, "through-seven", all(incident(curve, s) for s in flat.points), str(curve)
            )
        ]

        on_curve = [q for q in rational_points(curve) if q not in flat.points]
        if on_curve and rng.random() < 0.5:
            q = choose(on_curve, 1, rng)[0]
        else:
            q = planted_points(1, 0, modulus, rng)[0]
            while q in flat.points:
                q = planted_points(1, 0, modulus, rng)[0]

        image = psi(q, flat)
        if isinstance(image, Degenerate):
            members = [flat_point(flat, e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
            held = all(incident(member, q) for member in members)
            rows.append(CheckRow(trial, "degenerate-consistent", held, str(q)))
            return rows

        expected = incident(curve, q)
        observed = dual_incidence(phi(curve), image, flat)
        rows.append(
            CheckRow(
                trial,
                "incidence-equivalence",
                expected == observed,
                f"q={q} on_curve={expected} on_line={observed}",
            )
        )
        return rows


duality_campaign = DualityCampaign()
