"""Scenario runner: phased trajectories, splices, replays, reproductions.

A scenario is a closure plus parameters run over a horizon, optionally
overridden phase by phase (saving rate, growth rates, closure). Technology
always follows closed-form paths anchored at T = 0, so a phase that changes
growth rates re-extrapolates the whole path from the anchor rather than
compounding from the switch period. Capital is the only state carried across
periods and across splices.

The reproduction builders at the bottom wire up the four reference scenarios
(century baseline, policy freeze, slow adoption road, fast adoption road)
and the derived constructions the test suite leans on.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterator

from . import goldens
from .closures import PinnedLabor, PinnedOutput, PinnedTax
from .core import step_capital
from .errors import ClosureInfeasibleError, InfeasibleTransferError
from .params import GrowthRates, ModelParams, Snapshot, Technology

__all__ = [
    "Phase",
    "ScenarioSpec",
    "Trajectory",
    "run_scenario",
    "splice_phase",
    "stitch",
    "replay_suffix",
    "calibrated_params",
    "reproduction_spec",
    "policy_freeze_generating_spec",
    "stationary_spec",
    "shared_output_road",
    "BASELINE_GROWTH",
    "POLICY_FREEZE_GROWTH",
    "ROAD_SLOW_GROWTH",
    "ROAD_FAST_GROWTH",
]

# Growth-rate sets of the four reference scenarios.
BASELINE_GROWTH = GrowthRates(0.01, 0.015, 0.005)
POLICY_FREEZE_GROWTH = GrowthRates(0.007, 0.007, 0.005)
ROAD_SLOW_GROWTH = GrowthRates(0.018, 0.018, 0.005)
ROAD_FAST_GROWTH = GrowthRates(0.007, 0.025, 0.005)

START_CAPITAL = 500.0


@dataclass(frozen=True)
class Phase:
    """Overrides in force from `start` through `end` (both inclusive)."""

    start: int
    end: int
    s: float | None = None
    growth: GrowthRates | None = None
    closure: object | None = None

    def __post_init__(self):
        if self.start < 0 or self.end < self.start:
            raise ValueError(f"phase range [{self.start}, {self.end}] is invalid")


@dataclass(frozen=True)
class ScenarioSpec:
    """A runnable scenario: base parameters, default closure, phases, horizon."""

    params: ModelParams
    closure: object
    horizon: int
    start_capital: float = START_CAPITAL
    start: int = 0
    phases: tuple[Phase, ...] = ()
    label: str = ""

    def __post_init__(self):
        if self.horizon < self.start:
            raise ValueError("horizon precedes the start period")
        ordered = sorted(self.phases, key=lambda p: p.start)
        for left, right in zip(ordered, ordered[1:]):
            if right.start <= left.end:
                raise ValueError(
                    f"phases overlap: [{left.start},{left.end}] and "
                    f"[{right.start},{right.end}]"
                )
            if right.start != left.end + 1:
                raise ValueError(
                    f"phases must be contiguous: gap between {left.end} and {right.start}"
                )
        if ordered and ordered[-1].end > self.horizon:
            raise ValueError("last phase ends beyond the horizon")
        object.__setattr__(self, "phases", tuple(ordered))

    def phase_at(self, T: int) -> Phase | None:
        for phase in self.phases:
            if phase.start <= T <= phase.end:
                return phase
        return None

    def params_at(self, T: int) -> ModelParams:
        phase = self.phase_at(T)
        if phase is None:
            return self.params
        return replace(
            self.params,
            s=self.params.s if phase.s is None else phase.s,
            growth=self.params.growth if phase.growth is None else phase.growth,
        )

    def closure_at(self, T: int):
        phase = self.phase_at(T)
        if phase is None or phase.closure is None:
            return self.closure
        return phase.closure


@dataclass
class Trajectory:
    """Ordered snapshots of one run, indexed by absolute period."""

    snapshots: list[Snapshot]
    params: ModelParams
    closure_name: str
    start: int = 0
    label: str = ""

    def __len__(self) -> int:
        return len(self.snapshots)

    def __iter__(self) -> Iterator[Snapshot]:
        return iter(self.snapshots)

    @property
    def horizon(self) -> int:
        return self.start + len(self.snapshots) - 1

    def snapshot(self, T: int) -> Snapshot:
        index = T - self.start
        if not 0 <= index < len(self.snapshots):
            raise IndexError(f"period {T} outside [{self.start}, {self.horizon}]")
        return self.snapshots[index]

    def __getitem__(self, T: int) -> Snapshot:
        return self.snapshot(T)

    def series(self, name: str) -> list:
        return [getattr(s, name) for s in self.snapshots]

    def growth(self, T: int) -> float:
        """Per-period output growth rate ending at T."""
        prev = self.snapshot(T - 1)
        return self.snapshot(T).Y / prev.Y - 1.0


def run_scenario(spec: ScenarioSpec) -> Trajectory:
    """Run a scenario to its horizon. Deterministic for identical inputs."""
    snapshots: list[Snapshot] = []
    K = spec.start_capital
    for T in range(spec.start, spec.horizon + 1):
        params_T = spec.params_at(T)
        closure_T = spec.closure_at(T)
        try:
            snap = closure_T.complete(T, K, params_T)
        except InfeasibleTransferError as exc:
            raise ClosureInfeasibleError(T, getattr(closure_T, "name", "?"), exc.detail) from exc
        snapshots.append(snap)
        K = step_capital(K, snap.Y, params_T.s, params_T.theta)
    return Trajectory(
        snapshots=snapshots,
        params=spec.params,
        closure_name=getattr(spec.closure, "name", type(spec.closure).__name__),
        start=spec.start,
        label=spec.label,
    )


def splice_phase(prefix: Trajectory, phase: Phase, base_spec: ScenarioSpec) -> ScenarioSpec:
    """Continuation spec taking over from a prefix at the phase's start period.

    The continuation starts from the capital stock the prefix holds at the
    splice period; overrides apply from that period on. The phase must start
    where the prefix ends.
    """
    if phase.start != prefix.horizon:
        raise ValueError(
            f"phase starts at {phase.start} but the prefix ends at {prefix.horizon}"
        )
    params = replace(
        base_spec.params,
        s=base_spec.params.s if phase.s is None else phase.s,
        growth=base_spec.params.growth if phase.growth is None else phase.growth,
    )
    return ScenarioSpec(
        params=params,
        closure=phase.closure if phase.closure is not None else base_spec.closure,
        horizon=phase.end,
        start_capital=prefix.snapshot(phase.start).K,
        start=phase.start,
        label=base_spec.label,
    )


def stitch(prefix: Trajectory, continuation: Trajectory) -> Trajectory:
    """Merge a prefix with a continuation that replaces its final period."""
    if continuation.start != prefix.horizon:
        raise ValueError(
            f"continuation starts at {continuation.start}, prefix ends at {prefix.horizon}"
        )
    K_prefix = prefix.snapshot(continuation.start).K
    K_cont = continuation.snapshot(continuation.start).K
    scale = max(abs(K_prefix), 1.0)
    if abs(K_prefix - K_cont) > 1e-9 * scale:
        raise ValueError(
            f"discontinuous capital stock at the junction: {K_prefix!r} vs {K_cont!r}"
        )
    merged = prefix.snapshots[: continuation.start - prefix.start] + continuation.snapshots
    return Trajectory(
        snapshots=merged,
        params=prefix.params,
        closure_name=prefix.closure_name,
        start=prefix.start,
        label=prefix.label or continuation.label,
    )


def replay_suffix(spec: ScenarioSpec, trajectory: Trajectory, start: int) -> Trajectory:
    """Re-run a trajectory's tail from one of its own snapshots.

    Starts from the capital stock recorded at `start` and applies the same
    spec, so the result must equal the stored suffix exactly; the determinism
    tests assert that equality field by field.
    """
    continuation = ScenarioSpec(
        params=spec.params,
        closure=spec.closure,
        horizon=spec.horizon,
        start_capital=trajectory.snapshot(start).K,
        start=start,
        phases=spec.phases,
        label=spec.label,
    )
    return run_scenario(continuation)


def calibrated_params(
    growth: GrowthRates,
    s: float,
    tech: Technology | None = None,
    **overrides,
) -> ModelParams:
    """ModelParams on the standard calibrated start state."""
    from .calibration import calibrate

    base = tech if tech is not None else calibrate().tech
    return ModelParams(base_tech=base, growth=growth, s=s, **overrides)


def reproduction_spec(table_id: str) -> ScenarioSpec:
    """The pinned-labor reproduction protocol for a reference table.

    Labor is pinned to the printed column (linearly interpolated between
    printed periods); everything else is forced by the identities. This is
    the documented protocol for tables whose generating closure is unknown,
    and it states its own premise: between printed periods the labor path is
    an assumption, not data.
    """
    if table_id == "T1":
        return ScenarioSpec(
            params=calibrated_params(BASELINE_GROWTH, s=0.15),
            closure=PinnedLabor(goldens.BASELINE.labor_path()),
            horizon=100,
            label="baseline-century",
        )
    if table_id == "T2":
        return ScenarioSpec(
            params=calibrated_params(POLICY_FREEZE_GROWTH, s=0.15),
            closure=PinnedLabor({0: 75.0}),
            horizon=10,
            label="policy-freeze",
        )
    if table_id == "T3a":
        path = goldens.ROAD_SLOW.labor_path()
        path[0] = 75.0
        path[69] = 0.0
        return ScenarioSpec(
            params=calibrated_params(ROAD_SLOW_GROWTH, s=0.25),
            closure=PinnedLabor(path),
            horizon=69,
            label="road-slow",
        )
    if table_id == "T3b":
        path = goldens.ROAD_FAST.labor_path()
        path[0] = 75.0
        path[52] = 0.0
        return ScenarioSpec(
            params=calibrated_params(ROAD_FAST_GROWTH, s=0.25),
            closure=PinnedLabor(path),
            horizon=52,
            label="road-fast",
        )
    raise ValueError(f"unknown table id {table_id!r}")


def policy_freeze_generating_spec() -> ScenarioSpec:
    """The closure that actually generates the policy-freeze table.

    Freezing the flat tax at its start value and letting labor adjust
    reproduces every printed cell, including the capital split the
    pinned-labor protocol cannot reach. Kept alongside the protocol run as
    documentation-by-test.
    """
    return ScenarioSpec(
        params=calibrated_params(POLICY_FREEZE_GROWTH, s=0.15),
        closure=PinnedTax(0.5),
        horizon=10,
        label="policy-freeze-generating",
    )


def stationary_spec(horizon: int = 10) -> ScenarioSpec:
    """Zero growth with saving exactly covering depreciation: a fixed point."""
    return ScenarioSpec(
        params=calibrated_params(GrowthRates(), s=0.1),
        closure=PinnedLabor(75.0),
        horizon=horizon,
        label="stationary",
    )


def shared_output_road(
    base: Trajectory, growth: GrowthRates, horizon: int, s: float = 0.25, **overrides
) -> Trajectory:
    """Run an adoption road on the baseline's output path.

    Both roads inherit the baseline output path and accumulate capital from
    it at their own saving rate, so their output and capital columns agree
    with each other period by period; each road's technology then determines
    how that shared product is produced and how little labor it needs. This
    is the construction under which the two roads' shared columns are exact.
    """
    if horizon > base.horizon:
        raise ValueError(f"road horizon {horizon} exceeds the base run's {base.horizon}")
    spec = ScenarioSpec(
        params=calibrated_params(growth, s=s, **overrides),
        closure=PinnedOutput(base.series("Y")),
        horizon=horizon,
        label="shared-output-road",
    )
    return run_scenario(spec)
