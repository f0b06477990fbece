"""Tests for the verification campaigns."""

import pytest

from cubiclab.cli import CAMPAIGN_NAMES
from cubiclab.errors import GuardExceededError, InvalidInputError
from cubiclab.experiments import CAMPAIGNS, CampaignParams, ReportRenderer, get_campaign
from cubiclab.experiments.campaigns import CHECK_CSV_HEADER, trial_rng
from cubiclab.oracle import BEZOUT_CSV_HEADER


def test_registry_matches_cli():
    assert sorted(CAMPAIGNS) == list(CAMPAIGN_NAMES)
    with pytest.raises(KeyError):
        get_campaign("nope")


def test_trial_rng_is_counter_based():
    first = trial_rng(3, 0).integers(0, 2**32, size=4).tolist()
    assert trial_rng(3, 0).integers(0, 2**32, size=4).tolist() == first
    assert trial_rng(3, 1).integers(0, 2**32, size=4).tolist() != first


def test_params_validation():
    with pytest.raises(InvalidInputError):
        CampaignParams(p=12, trials=1, seed=0)
    with pytest.raises(InvalidInputError):
        CampaignParams(p=13, trials=-1, seed=0)


@pytest.mark.parametrize(
    ("name", "p", "trials"),
    [
        ("duality", 7, 12),
        ("lemma", 13, 4),
        ("multiplicity", 13, 6),
        ("proposition", 13, 10),
        ("bezout", 11, 3),
    ],
)
def test_campaign_holds(name, p, trials):
    summary = get_campaign(name).execute(CampaignParams(p, trials, seed=1), show_progress=False)
    assert summary.ok, summary.violations
    assert summary.exit_code == 0
    assert summary.checks == len(summary.rows) > 0
    assert all(row[0] < trials for row in summary.rows)


def test_check_rows_layout(tmp_path):
    summary = get_campaign("proposition").execute(CampaignParams(13, 5, 2), show_progress=False)
    assert summary.header == CHECK_CSV_HEADER
    assert [row[0] for row in summary.rows] == sorted(row[0] for row in summary.rows)
    checks = {row[1] for row in summary.rows}
    assert checks <= {"rank-7", "rank-8", "rank-7-filtered", "rank-8-filtered"}
    assert sum(summary.notes.values()) == summary.checks

    path = tmp_path / "proposition.csv"
    summary.write_csv(path)
    lines = path.read_text().splitlines()
    assert lines[0] == "trial,check,ok,detail"
    assert len(lines) == 1 + summary.checks


def test_bezout_rows_and_notes():
    summary = get_campaign("bezout").execute(CampaignParams(7, 2, 0), show_progress=False)
    assert summary.header == BEZOUT_CSV_HEADER
    assert len(summary.rows) == 6
    assert summary.rows[0][1] == "cubic/cubic"
    assert 0 <= summary.notes["max cubic/cubic"] <= 9


def test_field_size_guards():
    with pytest.raises(InvalidInputError):
        get_campaign("lemma").execute(CampaignParams(7, 1, 0), show_progress=False)
    with pytest.raises(InvalidInputError):
        get_campaign("multiplicity").execute(CampaignParams(3, 1, 0), show_progress=False)
    with pytest.raises(GuardExceededError):
        get_campaign("bezout").execute(CampaignParams(37, 1, 0), show_progress=False)


@pytest.mark.parametrize("name", ["duality", "proposition"])
def test_rows_independent_of_threads(name):
    campaign = get_campaign(name)
    single = campaign.execute(CampaignParams(7, 6, 4, threads=1), show_progress=False)
    pooled = campaign.execute(CampaignParams(7, 6, 4, threads=3), show_progress=False)
    assert single.rows == pooled.rows


def test_zero_trials():
    summary = get_campaign("duality").execute(CampaignParams(7, 0, 0), show_progress=False)
    assert summary.ok
    assert summary.rows == []


def test_progress_goes_to_stderr(capsys):
    get_campaign("duality").execute(CampaignParams(7, 2, 0))
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "verify duality completed [p=7 trials=2 seed=0]" in captured.err


def test_campaign_summary_renders():
    summary = get_campaign("duality").execute(CampaignParams(7, 3, 0), show_progress=False)
    text = ReportRenderer().render("campaign.md", summary.to_context())
    assert text.startswith("# Campaign: duality")
    assert "None." in text
