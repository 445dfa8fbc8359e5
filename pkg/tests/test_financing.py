"""Transfer financing under both regimes.

The damped fixed-point solver below is the independent oracle for the
pinned-transfer tax: it knows nothing about the closed-form quadratic in the
package, only the budget and the labor-supply condition, and it was written
against those two equations before being pointed at the implementation.
"""

import random

import pytest
from hypothesis import given, strategies as st

from automacro import (
    InfeasibleTransferError,
    calibrated_params,
    flat_tax_given_labor,
    flat_tax_given_transfer,
    labor_given_flat_tax,
    public_capital_given_labor,
    transfer_tax_candidates,
    GrowthRates,
)
from automacro.financing import corner_labor_given_flat_tax, corner_labor_given_transfer
from automacro.core import allocate_from_labor


def fixed_point_tax(G, w, r, K, Q, params, damping=0.5, tol=1e-12, max_iter=100_000):
    """Oracle: tax rate funding transfer G, by damped budget iteration.

    Supply:  L(t) = n - d*G / (w*(1-t)*Q)
    Budget:  t = n*G / (r*K + w*L(t))

    Starting from the full-employment tax floor, the damped map climbs
    monotonically to the lowest fixed point, which is the economically kept
    branch (same revenue, least labor withdrawn). Returns None when the
    iteration cannot settle, i.e. the transfer is out of reach.
    """
    n, d = params.population, params.disincentive
    t = n * G / (r * K + w * n)
    for _ in range(max_iter):
        L = n - d * G / (w * (1.0 - t) * Q)
        nxt = (1.0 - damping) * t + damping * (n * G / (r * K + w * L))
        if not 0.0 < nxt < 1.0:
            return None
        if abs(nxt - t) < tol:
            return nxt
        t = nxt
    return None


@pytest.fixture(scope="module")
def freeze_midpoint_state(freeze_pinned_run):
    """Interior state five periods into the policy freeze, labor pinned."""
    snap = freeze_pinned_run.snapshot(5)
    params = freeze_pinned_run.params
    return snap, params, snap.tech.labor_quality


def test_quadratic_agrees_with_fixed_point_oracle(freeze_midpoint_state):
    snap, params, Q = freeze_midpoint_state
    rng = random.Random(20260822)
    checked = 0
    while checked < 100:
        G = rng.uniform(0.02, 1.3) * snap.G
        want = fixed_point_tax(G, snap.w, snap.r, snap.K, Q, params)
        if want is None:
            continue
        got = flat_tax_given_transfer(G, snap.w, snap.r, snap.K, Q, params)
        assert abs(got - want) <= 1e-8, f"G={G}: quadratic {got} oracle {want}"
        checked += 1


def test_branch_selection_keeps_the_low_tax_root(freeze_midpoint_state):
    snap, params, Q = freeze_midpoint_state
    keep, twin = transfer_tax_candidates(snap.G, snap.w, snap.r, snap.K, Q, params)
    assert f"{keep:.3f}" == "0.503"
    assert f"{twin:.3f}" == "0.802"
    # the kept root closes the loop on the state that generated the transfer
    assert abs(keep - snap.t) <= 1e-12
    assert flat_tax_given_transfer(snap.G, snap.w, snap.r, snap.K, Q, params) == keep
    # the twin funds the same budget from a depressed labor supply
    for t in (keep, twin):
        L = params.population - params.disincentive * snap.G / (
            snap.w * (1.0 - t) * Q
        )
        budget_gap = params.population * snap.G - t * (snap.r * snap.K + snap.w * L)
        assert abs(budget_gap) <= 1e-9 * snap.Y
    assert twin > keep


def test_transfer_beyond_peak_is_refused(freeze_midpoint_state):
    snap, params, Q = freeze_midpoint_state
    # just past the revenue peak the quadratic loses its real roots
    with pytest.raises(InfeasibleTransferError):
        transfer_tax_candidates(2.0 * snap.G, snap.w, snap.r, snap.K, Q, params)
    # far past it the roots return, but outside the admissible rate range
    with pytest.raises(InfeasibleTransferError):
        flat_tax_given_transfer(10.0 * snap.G, snap.w, snap.r, snap.K, Q, params)


@given(L=st.floats(62.0, 95.0))
def test_labor_tax_transfer_round_trip_on_kept_branch(L):
    """High-labor states sit on the kept side of the revenue curve, so
    pinning their own transfer recovers the same tax and labor."""
    params = calibrated_params(GrowthRates(), s=0.15)
    tech = params.tech_at(3)
    alloc = allocate_from_labor(700.0, L, tech, params.alpha)
    G, t = flat_tax_given_labor(L, alloc.Y, alloc.w, tech.labor_quality, params)
    back_L = labor_given_flat_tax(t, 700.0, alloc.w, alloc.r, tech.labor_quality, params)
    assert abs(back_L - L) <= 1e-9 * max(L, 1.0)
    back_t = flat_tax_given_transfer(G, alloc.w, alloc.r, 700.0, tech.labor_quality, params)
    assert abs(back_t - t) <= 1e-9


@given(L=st.floats(10.0, 50.0))
def test_low_labor_states_invert_to_their_twin(L):
    """States on the far side of the peak raise the same revenue as a
    low-tax state; pinning their transfer lands on that twin, not on them."""
    params = calibrated_params(GrowthRates(), s=0.15)
    tech = params.tech_at(3)
    alloc = allocate_from_labor(700.0, L, tech, params.alpha)
    G, t = flat_tax_given_labor(L, alloc.Y, alloc.w, tech.labor_quality, params)
    keep, twin = transfer_tax_candidates(
        G, alloc.w, alloc.r, 700.0, tech.labor_quality, params
    )
    assert abs(twin - t) <= 1e-9  # the drawn state is the rejected branch
    assert keep < t - 1e-6
    back_t = flat_tax_given_transfer(G, alloc.w, alloc.r, 700.0, tech.labor_quality, params)
    assert back_t == keep


def test_public_capital_start_row():
    """At the calibrated start the socialized regime lands on exact sevenths:
    G = 4/7 per person, wage tax 3/7."""
    params = calibrated_params(GrowthRates(), s=0.15)
    tech = params.tech_at(0)
    G, t_wage = public_capital_given_labor(
        75.0, 100.0, 1.0, 0.05, 500.0, 1.0, params
    )
    assert abs(G - 4.0 / 7.0) <= 1e-12
    assert abs(t_wage - 3.0 / 7.0) <= 1e-12
    assert f"{G:.2f}" == "0.57"
    assert f"{t_wage:.2f}" == "0.43"


def test_both_regimes_share_the_supply_condition(baseline_run):
    """G / (1 - t) is the supply-side object both regimes must agree on."""
    params = baseline_run.params
    for T in (0, 10, 30, 50, 70, 90, 100):
        snap = baseline_run.snapshot(T)
        if snap.G_public is None:
            continue
        lhs = snap.G / (1.0 - snap.t)
        rhs = snap.G_public / (1.0 - snap.t_wage)
        assert abs(lhs - rhs) <= 1e-9 * max(1.0, lhs)


def test_public_capital_infeasible_when_capital_income_overshoots():
    params = calibrated_params(GrowthRates(), s=0.15)
    # enormous capital income against a tiny implied transfer budget
    with pytest.raises(InfeasibleTransferError):
        public_capital_given_labor(99.0, 100.0, 1.0, 0.05, 50_000.0, 1.0, params)


def test_corner_labor_given_flat_tax_matches_supply_condition():
    params = calibrated_params(GrowthRates(), s=0.15)
    t, Q = 0.5, 1.0
    L = corner_labor_given_flat_tax(t, Q, params)
    # at the corner the wage bill is (1 - alpha) * Y, so the supply condition
    # reduces to a share equation independent of the technology level
    n, d = params.population, params.disincentive
    alloc = allocate_from_labor(500.0, L, params.tech_at(0), params.alpha)
    G = t * alloc.Y / n
    implied = n - d * G / (alloc.w * (1.0 - t) * Q)
    assert abs(implied - L) <= 1e-9


def test_corner_labor_given_transfer_round_trip():
    # a corner state: machines far from profitable
    from automacro import Technology, ModelParams

    params = ModelParams(base_tech=Technology(0.78, 0.004), s=0.15)
    tech = params.tech_at(0)
    alloc = allocate_from_labor(500.0, 70.0, tech, params.alpha)
    assert alloc.regime == "corner"
    G, t = flat_tax_given_labor(70.0, alloc.Y, alloc.w, 1.0, params)
    back = corner_labor_given_transfer(G, 500.0, tech, params)
    assert abs(back - 70.0) <= 1e-7
