"""Transition criteria and era events over a trajectory.

Six per-period conditions summarize whether an economy is moving toward
workless abundance: income rising, labor falling, labor quality rising, the
transfer share of income rising, the capital share rising, and the net return
on capital staying above the growth rate. The first five are strict rises
(or falls) with a small noise floor, so a constant series evaluates false;
the last is a strict per-period inequality.

Era events report when thresholds are first crossed: the transfer half
reaching the abundance fraction of per-capita income, and labor falling to
effectively zero. The steady-state gap series |K/Y - s/(g + theta)| is a
diagnostic of how far the run is from its asymptote, not a criterion.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .scenarios import Trajectory

__all__ = ["CriteriaReport", "evaluate_criteria", "CRITERIA_NAMES"]

RISE_TOL = 1e-9

CRITERIA_NAMES = (
    "income_rising",
    "labor_falling",
    "quality_rising",
    "transfer_share_rising",
    "capital_share_rising",
    "return_exceeds_growth",
)


def _rises(cur: float, prev: float) -> bool:
    return cur > prev + RISE_TOL * max(1.0, abs(prev))


@dataclass
class CriteriaReport:
    window: tuple[int, int]
    per_period: dict[str, dict[int, bool]]
    verdicts: dict[str, bool]
    abundance_onset: int | None
    post_labor_onset: int | None
    landmarks: dict[int, float] = field(default_factory=dict)
    steady_state_gap: dict[int, float] = field(default_factory=dict)

    def all_true(self) -> bool:
        return all(self.verdicts.values())

    def summary(self) -> str:
        lines = [f"criteria over periods {self.window[0]}..{self.window[1]}:"]
        for name in CRITERIA_NAMES:
            flags = self.per_period[name]
            holds = self.verdicts[name]
            fails = [T for T, ok in flags.items() if not ok]
            note = "" if holds else f"  (fails at {fails[:6]}{'...' if len(fails) > 6 else ''})"
            lines.append(f"  {name:<24s} {'true' if holds else 'false'}{note}")
        lines.append(f"  abundance onset: {self.abundance_onset}")
        lines.append(f"  post-labor onset: {self.post_labor_onset}")
        return "\n".join(lines)


def evaluate_criteria(
    trajectory: Trajectory,
    window: tuple[int, int] | None = None,
    landmark_periods: tuple[int, ...] = (),
    labor_eps: float = 0.5,
) -> CriteriaReport:
    """Evaluate the six criteria over `window` and scan events everywhere.

    The window defaults to every period after the first; each per-period flag
    compares a period with its predecessor. Events are scanned over the whole
    trajectory regardless of the window. The steady-state gap uses the base
    saving rate; phase overrides are not reflected in it.
    """
    if len(trajectory) < 2:
        raise ValueError("criteria need at least two periods")
    first, last = window or (trajectory.start + 1, trajectory.horizon)
    if first <= trajectory.start or last > trajectory.horizon:
        raise ValueError(
            f"window [{first}, {last}] must lie inside "
            f"({trajectory.start}, {trajectory.horizon}]"
        )
    params = trajectory.params
    n = params.population

    per_period: dict[str, dict[int, bool]] = {name: {} for name in CRITERIA_NAMES}
    for T in range(first, last + 1):
        prev = trajectory.snapshot(T - 1)
        cur = trajectory.snapshot(T)
        g = cur.Y / prev.Y - 1.0
        per_period["income_rising"][T] = _rises(cur.Y, prev.Y)
        per_period["labor_falling"][T] = _rises(prev.L, cur.L)
        per_period["quality_rising"][T] = _rises(
            cur.tech.labor_quality, prev.tech.labor_quality
        )
        per_period["transfer_share_rising"][T] = _rises(
            n * cur.G / cur.Y, n * prev.G / prev.Y
        )
        per_period["capital_share_rising"][T] = _rises(
            cur.capital_share, prev.capital_share
        )
        per_period["return_exceeds_growth"][T] = cur.net_return > g

    verdicts = {name: all(flags.values()) for name, flags in per_period.items()}

    abundance_onset = None
    post_labor_onset = None
    for snap in trajectory:
        if (
            abundance_onset is None
            and snap.G / 2.0 >= params.abundance_fraction * snap.Y / n - 1e-12
        ):
            abundance_onset = snap.T
        if post_labor_onset is None and snap.L <= labor_eps:
            post_labor_onset = snap.T

    steady_gap = {}
    for T in range(trajectory.start + 1, trajectory.horizon + 1):
        snap = trajectory.snapshot(T)
        g = trajectory.growth(T)
        denom = g + params.theta
        if denom > 0:
            steady_gap[T] = abs(snap.K / snap.Y - params.s / denom)

    landmarks = {T: trajectory.snapshot(T).L for T in landmark_periods}

    return CriteriaReport(
        window=(first, last),
        per_period=per_period,
        verdicts=verdicts,
        abundance_onset=abundance_onset,
        post_labor_onset=post_labor_onset,
        landmarks=landmarks,
        steady_state_gap=steady_gap,
    )
