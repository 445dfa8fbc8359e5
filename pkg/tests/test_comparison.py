"""Paired-economy comparisons on a shared output path."""

import pytest

from automacro import (
    ComparisonError,
    GrowthRates,
    PinnedOutput,
    calibrated_params,
    compare_productivity,
    compare_savings,
)
from automacro.comparison import implied_output_path, require_pinned_output

SAVINGS_ORDERINGS = (
    "capital_higher",
    "automation_capital_higher",
    "labor_lower",
    "transfer_higher",
    "tax_higher",
    "capital_share_higher",
)


@pytest.fixture(scope="module")
def savings_pair(baseline_run):
    return compare_savings(baseline_run, s_low=0.15, s_high=0.25)


@pytest.fixture(scope="module")
def productivity_pair(baseline_run):
    return compare_productivity(baseline_run, automation_factor=1.1)


def test_savings_identities_hold_to_float_precision(savings_pair):
    assert savings_pair.max_residual() <= 1e-9


def test_savings_orderings_hold_from_the_first_period(savings_pair):
    for name in SAVINGS_ORDERINGS:
        verdict = savings_pair.ordering(name)
        # identical economies at the start, strictly ordered ever after
        assert verdict.holds_from == 1, (name, verdict.first_false)


def test_savings_pair_clips_where_labor_runs_out(savings_pair):
    """Under the century output path the thrifty economy needs no workers
    from period 82 on; the comparison ends where its premise ends."""
    assert savings_pair.labor_exhausted_at == 82
    assert savings_pair.low.horizon == 81
    assert savings_pair.high.horizon == 81
    assert max(savings_pair.ordering("transfer_higher").flags) == 81


def test_hand_sized_capital_offset():
    """Ten extra units of capital at the start displace exactly half a
    worker: the offset rate is r/w = 0.05."""
    params = calibrated_params(GrowthRates(), s=0.15)
    a = PinnedOutput(100.0).complete(0, 500.0, params)
    b = PinnedOutput(100.0).complete(0, 510.0, params)
    assert abs((b.L - a.L) + 0.5) <= 1e-9


def test_implied_output_path_recovers_investment(baseline_run):
    path = implied_output_path(baseline_run)
    assert set(path) == set(range(0, 100))
    p = baseline_run.params
    for T in (0, 40, 99):
        K, K_next = baseline_run.snapshot(T).K, baseline_run.snapshot(T + 1).K
        assert abs(path[T] - (K_next - (1.0 - p.theta) * K) / p.s) <= 1e-9 * 100.0


def test_require_pinned_output_refuses_other_closures(baseline_run):
    with pytest.raises(ComparisonError):
        require_pinned_output(baseline_run)  # closed with pinned labor


def test_productivity_capital_paths_are_shared(productivity_pair):
    assert max(productivity_pair.capital_match.values()) <= 1e-12
    assert max(productivity_pair.income_offset.values()) <= 1e-9


def test_productivity_return_ratio_follows_the_productivity_ratio(productivity_pair):
    # r scales with the automation level to the power 1 - alpha
    assert max(productivity_pair.return_ratio_gap.values()) <= 1e-9
    assert max(productivity_pair.factor_form_gap.values()) <= 1e-9


def test_productivity_robust_orderings_hold_everywhere(productivity_pair):
    for name in (
        "return_higher",
        "traditional_capital_lower",
        "automation_capital_higher",
        "labor_lower",
        "capital_share_higher",
    ):
        assert productivity_pair.ordering(name).holds_all, name


def test_productivity_transfer_ordering_arrives_late(productivity_pair):
    """A small productivity edge lowers the wage before automation capital
    outweighs it, so the transfer ordering only sets in partway through."""
    verdict = productivity_pair.ordering("transfer_higher")
    assert verdict.holds_all is False
    assert verdict.holds_from == 17
    assert productivity_pair.ordering("tax_higher").holds_from == 17
    assert productivity_pair.labor_exhausted_at is None
