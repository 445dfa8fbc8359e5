"""Multi-period machinery: runs, phases, splicing, replay, the two roads."""

import pytest

from automacro import (
    GrowthRates,
    Phase,
    PinnedLabor,
    PinnedTax,
    ScenarioSpec,
    calibrated_params,
    replay_suffix,
    reproduction_spec,
    run_scenario,
    splice_phase,
    stationary_spec,
    stitch,
)

FIELDS = ("T", "Y", "K", "K1", "K2", "L", "r", "w", "G", "t", "G_public", "t_wage")


def snapshots_equal(a, b):
    return all(getattr(a, f) == getattr(b, f) for f in FIELDS)


def test_stationary_run_is_a_fixed_point(stationary_run):
    first = stationary_run.snapshot(0)
    for snap in stationary_run:
        assert snap.K == first.K
        assert snap.Y == first.Y
        assert snap.L == 75.0
        assert snap.t == first.t


def test_trajectory_indexing(baseline_run):
    assert len(baseline_run) == 101
    assert baseline_run.horizon == 100
    assert baseline_run.snapshot(0).T == 0
    assert baseline_run[100].T == 100
    with pytest.raises(IndexError):
        baseline_run.snapshot(101)
    assert baseline_run.series("L")[0] == 75.0
    assert abs(baseline_run.growth(1) - (baseline_run[1].Y / baseline_run[0].Y - 1.0)) < 1e-15


def test_replay_suffix_is_exact(baseline_run):
    spec = reproduction_spec("T1")
    replay = replay_suffix(spec, baseline_run, 60)
    assert replay.start == 60 and replay.horizon == 100
    for T in range(60, 101):
        assert snapshots_equal(replay.snapshot(T), baseline_run.snapshot(T)), T


def test_null_splice_changes_nothing(baseline_run):
    """Splicing a phase that overrides nothing must reproduce the original
    run bit for bit after the junction."""
    spec = reproduction_spec("T1")
    prefix_spec = ScenarioSpec(
        params=spec.params,
        closure=spec.closure,
        horizon=50,
        start_capital=spec.start_capital,
        label=spec.label,
    )
    prefix = run_scenario(prefix_spec)
    cont_spec = splice_phase(prefix, Phase(start=50, end=100), spec)
    merged = stitch(prefix, run_scenario(cont_spec))
    assert merged.horizon == 100
    for T in range(0, 101):
        assert snapshots_equal(merged.snapshot(T), baseline_run.snapshot(T)), T


def test_splice_changes_take_effect_at_the_junction(baseline_run):
    spec = reproduction_spec("T1")
    prefix_spec = ScenarioSpec(
        params=spec.params, closure=spec.closure, horizon=50,
        start_capital=spec.start_capital,
    )
    prefix = run_scenario(prefix_spec)
    thrifty = splice_phase(prefix, Phase(start=50, end=100, s=0.25), spec)
    cont = run_scenario(thrifty)
    # same period-50 state, faster accumulation afterwards
    assert cont.snapshot(50).K == prefix.snapshot(50).K
    assert cont.snapshot(60).K > baseline_run.snapshot(60).K


def test_splice_must_start_at_the_prefix_end(baseline_run):
    spec = reproduction_spec("T1")
    with pytest.raises(ValueError):
        splice_phase(baseline_run, Phase(start=40, end=60), spec)


def test_stitch_rejects_discontinuous_capital(baseline_run):
    spec = reproduction_spec("T1")
    prefix = run_scenario(
        ScenarioSpec(params=spec.params, closure=spec.closure, horizon=50,
                     start_capital=spec.start_capital)
    )
    rogue = run_scenario(
        ScenarioSpec(params=spec.params, closure=spec.closure, horizon=100,
                     start=50, start_capital=prefix.snapshot(50).K + 1.0)
    )
    with pytest.raises(ValueError, match="discontinuous"):
        stitch(prefix, rogue)


def test_phases_must_be_contiguous_and_inside_the_horizon():
    params = calibrated_params(GrowthRates(), s=0.15)
    with pytest.raises(ValueError, match="overlap"):
        ScenarioSpec(
            params=params, closure=PinnedLabor(75.0), horizon=10,
            phases=(Phase(0, 5), Phase(4, 8)),
        )
    with pytest.raises(ValueError, match="contiguous"):
        ScenarioSpec(
            params=params, closure=PinnedLabor(75.0), horizon=10,
            phases=(Phase(0, 4), Phase(7, 9)),
        )
    with pytest.raises(ValueError, match="horizon"):
        ScenarioSpec(
            params=params, closure=PinnedLabor(75.0), horizon=10,
            phases=(Phase(0, 11),),
        )


def test_phase_overrides_resolve_per_period():
    params = calibrated_params(GrowthRates(), s=0.15)
    spec = ScenarioSpec(
        params=params,
        closure=PinnedLabor(75.0),
        horizon=10,
        phases=(Phase(3, 6, s=0.3, closure=PinnedTax(0.5)),),
    )
    assert spec.params_at(2).s == 0.15
    assert spec.params_at(3).s == 0.3
    assert spec.params_at(7).s == 0.15
    assert spec.closure_at(4).name == "pinned_tax"
    assert spec.closure_at(7).name == "pinned_labor"


def test_roads_turn_at_the_same_period(road_slow_run, road_fast_run):
    # both adoption roads pass L = 30 workers at period 40
    assert abs(road_slow_run.snapshot(40).L - 30.0) <= 0.5
    assert abs(road_fast_run.snapshot(40).L - 30.0) <= 0.5


def test_fast_road_ends_workless(road_fast_run):
    last = road_fast_run.snapshot(52)
    assert last.regime == "post_labor"
    assert last.L == 0.0
    assert last.w == 0.0


def test_shared_output_roads_share_output_and_capital(
    road_slow_shared, road_fast_shared
):
    for T in range(0, 53):
        a = road_slow_shared.snapshot(T)
        b = road_fast_shared.snapshot(T)
        assert abs(a.Y - b.Y) <= 1e-9 * max(a.Y, 1.0)
        assert abs(a.K - b.K) <= 1e-9 * max(a.K, 1.0)


def test_shared_output_roads_differ_in_how_they_produce(
    road_slow_shared, road_fast_shared
):
    # same product at period 45, but the fast road has replaced more workers
    a = road_slow_shared.snapshot(45)
    b = road_fast_shared.snapshot(45)
    assert b.L < a.L
    assert b.K2 > a.K2


def test_stationary_spec_has_matching_depreciation_coverage():
    spec = stationary_spec(5)
    p = spec.params
    # saving exactly replaces depreciation at the start state
    assert abs(p.s * 100.0 - p.theta * 500.0) <= 1e-12
