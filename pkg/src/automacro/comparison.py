"""Paired-economy comparisons.

Two constructions, each holding one aggregate path fixed across a pair of
runs so that everything else moves for exactly one reason.

Saving pair: two economies share an output path but save different fractions
of it. Output and the traditional capital stock match period by period; the
extra capital of the thriftier economy all lands in automation, and labor
falls one for one against it at the going machine-for-worker rate.

Productivity pair: two economies share a capital path, one of them with
automation productivity scaled up. Output is backed out of the accumulation
identity so the shared capital path is reproduced exactly. The scaled economy
pays a higher return, allocates less to traditional capital and more to
automation, and employs less labor.

Both constructions only make sense when the shared path is pinned directly,
so the identity checks refuse trajectories produced under any other closure:
for a pair of free-output runs the equalities below are coincidences, not
consequences.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .closures import PinnedOutput
from .errors import ComparisonError
from .params import POST_LABOR
from .scenarios import ScenarioSpec, Trajectory, run_scenario

__all__ = [
    "OrderingVerdict",
    "SavingsComparison",
    "ProductivityComparison",
    "compare_savings",
    "compare_productivity",
    "require_pinned_output",
]


@dataclass
class OrderingVerdict:
    """One cross-economy ordering, evaluated period by period."""

    name: str
    flags: dict[int, bool]

    @property
    def holds_all(self) -> bool:
        return all(self.flags.values())

    @property
    def first_true(self) -> int | None:
        for T in sorted(self.flags):
            if self.flags[T]:
                return T
        return None

    @property
    def first_false(self) -> int | None:
        for T in sorted(self.flags):
            if not self.flags[T]:
                return T
        return None

    @property
    def holds_from(self) -> int | None:
        """Earliest period after which the ordering never fails again."""
        cutoff = None
        for T in sorted(self.flags):
            if self.flags[T]:
                if cutoff is None:
                    cutoff = T
            else:
                cutoff = None
        return cutoff


def require_pinned_output(*trajectories: Trajectory) -> None:
    """Refuse identity checks on runs whose output was not pinned."""
    for traj in trajectories:
        if traj.closure_name != "pinned_output":
            raise ComparisonError(
                f"shared-path identities need a pinned output path; "
                f"got closure {traj.closure_name!r}"
            )


def _periods(a: Trajectory, b: Trajectory) -> range:
    if a.start != b.start or a.horizon != b.horizon:
        raise ComparisonError(
            f"runs cover different periods: [{a.start},{a.horizon}] "
            f"vs [{b.start},{b.horizon}]"
        )
    return range(a.start, a.horizon + 1)


def _clip_at_labor_exhaustion(
    a: Trajectory, b: Trajectory
) -> tuple[Trajectory, Trajectory, int | None]:
    """Cut both runs before the first period either stops employing anyone.

    The paired constructions reason about wage-earning economies; once one
    economy's capital alone covers the pinned output path, its labor demand
    is zero, the wage side of the identities disappears, and the pair is no
    longer comparing the thing it was built to compare. The clipped-off
    period is reported so callers can see the domain ended, not assume the
    horizon was short.
    """
    cut = None
    for x, y in zip(a, b):
        if x.regime == POST_LABOR or y.regime == POST_LABOR:
            cut = x.T
            break
    if cut == a.start:
        raise ComparisonError(
            "a run is workless from its first period; the pair never holds"
        )
    if cut is None:
        return a, b, None

    def clipped(t: Trajectory) -> Trajectory:
        return Trajectory(
            snapshots=t.snapshots[: cut - t.start],
            params=t.params,
            closure_name=t.closure_name,
            start=t.start,
            label=t.label,
        )

    return clipped(a), clipped(b), cut


@dataclass
class SavingsComparison:
    low: Trajectory
    high: Trajectory
    s_low: float
    s_high: float
    orderings: dict[str, OrderingVerdict]
    # relative residuals of the construction's identities, per period
    output_match: dict[int, float]
    traditional_match: dict[int, float]
    split_offset: dict[int, float]
    # first period clipped off because one economy stopped employing anyone
    labor_exhausted_at: int | None = None

    def ordering(self, name: str) -> OrderingVerdict:
        return self.orderings[name]

    def max_residual(self) -> float:
        pools = (self.output_match, self.traditional_match, self.split_offset)
        return max(max(pool.values()) for pool in pools if pool)


@dataclass
class ProductivityComparison:
    base: Trajectory
    scaled: Trajectory
    automation_factor: float
    orderings: dict[str, OrderingVerdict]
    capital_match: dict[int, float]
    income_offset: dict[int, float]
    return_ratio_gap: dict[int, float]  # interior periods only
    factor_form_gap: dict[int, float]  # interior periods only
    labor_exhausted_at: int | None = None

    def ordering(self, name: str) -> OrderingVerdict:
        return self.orderings[name]


def _verdicts(periods, spec: dict) -> dict[str, OrderingVerdict]:
    out = {}
    for name, test in spec.items():
        out[name] = OrderingVerdict(name, {T: test(T) for T in periods})
    return out


def compare_savings(base: Trajectory, s_low: float, s_high: float) -> SavingsComparison:
    """Run the saving pair on `base`'s output path and collect the verdicts.

    Both runs pin output to the base path and start from the base capital
    stock; only the saving rate differs. Orderings compare the high-saving
    run against the low one. The two runs coincide at the start period by
    construction, so strict orderings there are reported false.

    The pair ends early if either economy stops employing anyone (a thrifty
    economy on a long pinned path eventually covers the whole path from
    capital alone); `labor_exhausted_at` records where.
    """
    if not s_low < s_high:
        raise ComparisonError(f"need s_low < s_high, got {s_low} and {s_high}")
    path = {T: base.snapshot(T).Y for T in range(base.start, base.horizon + 1)}
    K0 = base.snapshot(base.start).K

    def spec_for(s: float) -> ScenarioSpec:
        return ScenarioSpec(
            params=replace(base.params, s=s),
            closure=PinnedOutput(path),
            horizon=base.horizon,
            start_capital=K0,
            start=base.start,
            label=f"saving-pair s={s}",
        )

    low = run_scenario(spec_for(s_low))
    high = run_scenario(spec_for(s_high))
    require_pinned_output(low, high)
    low, high, exhausted = _clip_at_labor_exhaustion(low, high)
    periods = _periods(low, high)

    orderings = _verdicts(
        periods,
        {
            "capital_higher": lambda T: high[T].K > low[T].K,
            "automation_capital_higher": lambda T: high[T].K2 > low[T].K2,
            "labor_lower": lambda T: high[T].L < low[T].L,
            "transfer_higher": lambda T: high[T].G > low[T].G,
            "tax_higher": lambda T: high[T].t > low[T].t,
            "capital_share_higher": lambda T: high[T].capital_share
            > low[T].capital_share,
        },
    )

    output_match, traditional_match, split_offset = {}, {}, {}
    for T in periods:
        lo, hi = low[T], high[T]
        scale = max(abs(lo.Y), 1.0)
        output_match[T] = abs(hi.Y - lo.Y) / scale
        traditional_match[T] = abs(hi.K1 - lo.K1) / max(abs(lo.K1), 1.0)
        # extra capital is absorbed by labor withdrawal: w dL + r dK = 0
        split_offset[T] = (
            abs(lo.w * (hi.L - lo.L) + lo.r * (hi.K - lo.K)) / scale
        )

    return SavingsComparison(
        low=low,
        high=high,
        s_low=s_low,
        s_high=s_high,
        orderings=orderings,
        output_match=output_match,
        traditional_match=traditional_match,
        split_offset=split_offset,
        labor_exhausted_at=exhausted,
    )


def implied_output_path(base: Trajectory) -> dict[int, float]:
    """Output path that reproduces `base`'s capital path under its saving rate.

    Inverts the accumulation step, so it is defined up to the period before
    the base run ends. Assumes the base run used one saving rate throughout;
    a run with phase overrides of s would need its own inversion.
    """
    s = base.params.s
    theta = base.params.theta
    out = {}
    for T in range(base.start, base.horizon):
        K_now = base.snapshot(T).K
        K_next = base.snapshot(T + 1).K
        out[T] = (K_next - (1.0 - theta) * K_now) / s
    return out


def compare_productivity(
    base: Trajectory, automation_factor: float = 1.1
) -> ProductivityComparison:
    """Run the productivity pair on `base`'s capital path.

    Output is inverted from the accumulation identity so both runs walk the
    identical capital path; the scaled run multiplies automation productivity
    by `automation_factor` at every period. The return ratio and the
    factorization of output through the effective-labor aggregate are checked
    on periods where both runs price automation interiorly; at the calibrated
    start the base economy sits exactly on the idle margin and its corner
    prices coincide with the interior ones only up to rounding.
    """
    if automation_factor <= 1.0:
        raise ComparisonError(
            f"automation factor must exceed 1, got {automation_factor}"
        )
    path = implied_output_path(base)
    if not path:
        raise ComparisonError("base run is too short to invert accumulation")
    horizon = base.horizon - 1
    K0 = base.snapshot(base.start).K

    def run_with(params) -> Trajectory:
        return run_scenario(
            ScenarioSpec(
                params=params,
                closure=PinnedOutput(path),
                horizon=horizon,
                start_capital=K0,
                start=base.start,
                label="productivity-pair",
            )
        )

    plain = run_with(base.params)
    scaled_params = replace(
        base.params, base_tech=base.params.base_tech.scaled(automation_factor)
    )
    scaled = run_with(scaled_params)
    require_pinned_output(plain, scaled)
    plain, scaled, exhausted = _clip_at_labor_exhaustion(plain, scaled)
    periods = _periods(plain, scaled)

    orderings = _verdicts(
        periods,
        {
            "return_higher": lambda T: scaled[T].r > plain[T].r,
            "traditional_capital_lower": lambda T: scaled[T].K1 < plain[T].K1,
            "automation_capital_higher": lambda T: scaled[T].K2 > plain[T].K2,
            "labor_lower": lambda T: scaled[T].L < plain[T].L,
            "transfer_higher": lambda T: scaled[T].G > plain[T].G,
            "tax_higher": lambda T: scaled[T].t > plain[T].t,
            "capital_share_higher": lambda T: scaled[T].capital_share
            > plain[T].capital_share,
        },
    )

    capital_match, income_offset = {}, {}
    return_ratio_gap, factor_form_gap = {}, {}
    expected_ratio = automation_factor ** (1.0 - base.params.alpha)
    for T in periods:
        a, b = plain[T], scaled[T]
        capital_match[T] = abs(b.K - a.K) / max(abs(a.K), 1.0)
        scale = max(abs(a.Y), 1.0)
        income_offset[T] = (
            abs((b.w * b.L - a.w * a.L) + (b.r * b.K - a.r * a.K)) / scale
        )
        if a.regime == "interior" and b.regime == "interior":
            return_ratio_gap[T] = abs(b.r / a.r - expected_ratio)
            for snap in (a, b):
                # output factors through labor-equivalents of the whole
                # input bundle, valued at the per-equivalent price r / B
                tech = snap.tech
                bundle = tech.labor_productivity * snap.L + (
                    tech.automation_productivity * snap.K
                )
                gap = abs(snap.Y - snap.r / tech.automation_productivity * bundle)
                factor_form_gap[T] = max(
                    factor_form_gap.get(T, 0.0), gap / max(abs(snap.Y), 1.0)
                )

    return ProductivityComparison(
        base=plain,
        scaled=scaled,
        automation_factor=automation_factor,
        orderings=orderings,
        capital_match=capital_match,
        income_offset=income_offset,
        return_ratio_gap=return_ratio_gap,
        factor_form_gap=factor_form_gap,
        labor_exhausted_at=exhausted,
    )
