"""Verification campaigns, one module per property family."""

from cubiclab.experiments.campaigns.base import (
    CHECK_CSV_HEADER,
    BaseCampaign,
    CampaignParams,
    CampaignSummary,
    CheckRow,
    trial_rng,
)
from cubiclab.experiments.campaigns.bezout import BezoutCampaign, bezout_campaign
from cubiclab.experiments.campaigns.duality import DualityCampaign, duality_campaign
from cubiclab.experiments.campaigns.lemma import LemmaCampaign, lemma_campaign
from cubiclab.experiments.campaigns.multiplicity import (
    MultiplicityCampaign,
    multiplicity_campaign,
)
from cubiclab.experiments.campaigns.proposition import (
    PropositionCampaign,
    proposition_campaign,
)

CAMPAIGNS: dict[str, BaseCampaign] = {
    campaign.name: campaign
    for campaign in (
        duality_campaign,
        lemma_campaign,
        multiplicity_campaign,
        bezout_campaign,
        proposition_campaign,
    )
}


def get_campaign(name: str) -> BaseCampaign:
    """Look up a campaign by name.

    Raises:
        KeyError: If no campaign has that name
    """
    return CAMPAIGNS[name]


__all__ = [
    "CAMPAIGNS",
    "CHECK_CSV_HEADER",
    "BaseCampaign",
    "BezoutCampaign",
    "CampaignParams",
    "CampaignSummary",
    "CheckRow",
    "DualityCampaign",
    "LemmaCampaign",
    "MultiplicityCampaign",
    "PropositionCampaign",
    "bezout_campaign",
    "duality_campaign",
    "get_campaign",
    "lemma_campaign",
    "multiplicity_campaign",
    "proposition_campaign",
    "trial_rng",
]
