"""Shared fixtures. The reference runs are deterministic, so one instance
per session is safe to share across every test that reads it."""

import pytest

from automacro import (
    calibrate,
    policy_freeze_generating_spec,
    reproduction_spec,
    run_scenario,
    shared_output_road,
    stationary_spec,
    ROAD_FAST_GROWTH,
    ROAD_SLOW_GROWTH,
)


@pytest.fixture(scope="session")
def calibrated():
    return calibrate()


@pytest.fixture(scope="session")
def baseline_run():
    """Century run, labor pinned to the published decade path."""
    return run_scenario(reproduction_spec("T1"))


@pytest.fixture(scope="session")
def freeze_pinned_run():
    """Policy-freeze decade with labor pinned flat at 75."""
    return run_scenario(reproduction_spec("T2"))


@pytest.fixture(scope="session")
def freeze_generating_run():
    """Policy-freeze decade under its generating closure (frozen flat tax)."""
    return run_scenario(policy_freeze_generating_spec())


@pytest.fixture(scope="session")
def road_slow_run():
    return run_scenario(reproduction_spec("T3a"))


@pytest.fixture(scope="session")
def road_fast_run():
    return run_scenario(reproduction_spec("T3b"))


@pytest.fixture(scope="session")
def road_slow_shared(baseline_run):
    return shared_output_road(baseline_run, ROAD_SLOW_GROWTH, 69)


@pytest.fixture(scope="session")
def road_fast_shared(baseline_run):
    return shared_output_road(baseline_run, ROAD_FAST_GROWTH, 52)


@pytest.fixture(scope="session")
def stationary_run():
    return run_scenario(stationary_spec(10))
