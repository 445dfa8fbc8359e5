"""Transition criteria: per-period checks, verdicts, event onsets."""

import pytest

from automacro import evaluate_criteria
from automacro.criteria import CRITERIA_NAMES


def test_baseline_century_meets_every_criterion(baseline_run):
    report = evaluate_criteria(baseline_run)
    assert report.window == (1, 100)
    assert report.all_true(), report.summary()
    for name in CRITERIA_NAMES:
        assert report.verdicts[name] is True


def test_baseline_event_onsets(baseline_run):
    report = evaluate_criteria(baseline_run)
    # the calibrated start already pays half the per-person abundance level
    assert report.abundance_onset == 0
    # nobody reaches a workless period on the century path
    assert report.post_labor_onset is None


def test_stationary_run_fails_the_growth_criteria(stationary_run):
    report = evaluate_criteria(stationary_run)
    assert report.verdicts["income_rising"] is False
    assert report.verdicts["labor_falling"] is False
    assert report.verdicts["quality_rising"] is False
    assert report.verdicts["transfer_share_rising"] is False
    assert report.verdicts["capital_share_rising"] is False
    # the net return stays positive against zero growth
    assert report.verdicts["return_exceeds_growth"] is True
    assert report.all_true() is False


def test_stationary_run_sits_on_the_steady_state(stationary_run):
    report = evaluate_criteria(stationary_run)
    # K/Y = 5 against s/(g + theta) = 0.1/0.02
    assert max(report.steady_state_gap.values()) <= 1e-9


def test_fast_road_onsets(road_fast_run):
    report = evaluate_criteria(road_fast_run)
    assert report.post_labor_onset == 52
    assert report.abundance_onset == 0


def test_landmarks_record_labor(baseline_run):
    report = evaluate_criteria(baseline_run, landmark_periods=(40, 100))
    assert set(report.landmarks) == {40, 100}
    assert report.landmarks[40] == baseline_run.snapshot(40).L


def test_window_validation(baseline_run):
    with pytest.raises(ValueError):
        evaluate_criteria(baseline_run, window=(0, 100))  # needs a predecessor
    with pytest.raises(ValueError):
        evaluate_criteria(baseline_run, window=(1, 101))  # beyond the run


def test_custom_window_restricts_the_flags(baseline_run):
    report = evaluate_criteria(baseline_run, window=(10, 20))
    flags = report.per_period["income_rising"]
    assert set(flags) == set(range(10, 21))


def test_summary_is_readable(baseline_run):
    text = evaluate_criteria(baseline_run).summary()
    for name in CRITERIA_NAMES:
        assert name in text
    assert "abundance onset: 0" in text
