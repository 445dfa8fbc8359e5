"""Single-period production and pricing.

Given the capital stock, the technology levels and one closing value (labor
here; other closures build on these pieces), the accounting and marginal
product conditions determine everything else in closed form. Three branches:

interior
    Automation capital is in active use. Competition prices a machine-unit
    like the workers it replaces, so both factor prices depend on technology
    alone and income splits as Y = w L + r K.

corner
    Automation is unprofitable and idle. Output comes from traditional
    capital and labor, prices are their marginal products.

post_labor
    Nobody works. Capital splits in fixed proportion between the two uses
    and all income accrues to capital. When a closure pins the output path
    the return is read off as Y / K; otherwise it is the technology-driven
    reduced form.

The residual suite reports how well a snapshot satisfies every identity, so a
test can verify a state without re-deriving it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .params import CORNER, INTERIOR, POST_LABOR, ModelParams, Snapshot, Technology

__all__ = [
    "Allocation",
    "margin_factor",
    "reduced_prices",
    "h_factor",
    "allocate_from_labor",
    "postlabor_allocation",
    "production",
    "step_capital",
    "residuals",
]

# Treat an interior automation stock below this share of K as sitting on the
# corner boundary, where the two branches coincide. Keeps the calibrated start
# (automation exactly zero up to float noise) on the corner branch with its
# exact decimal prices.
CORNER_TOL = 1e-9


@dataclass(frozen=True)
class Allocation:
    """Real side of a period: quantities, prices, active branch."""

    Y: float
    K: float
    K1: float
    K2: float
    L: float
    r: float
    w: float
    regime: str


def margin_factor(alpha: float) -> float:
    """Price level common to both reduced-form factor prices."""
    return alpha**alpha * (1.0 - alpha) ** (1.0 - alpha)


def reduced_prices(tech: Technology, alpha: float) -> tuple[float, float]:
    """Wage and rental rate while automation is in active use.

    Both depend only on technology. Their ratio w / r equals the ratio of
    labor productivity to automation productivity, the machine-equivalence
    rate, which is what makes workers and machines exchangeable at the margin.
    Growth follows in logs: the wage grows with labor productivity minus alpha
    times automation productivity growth, the rental rate with (1 - alpha)
    times automation productivity growth.
    """
    m = margin_factor(alpha)
    w = tech.labor_productivity * m / tech.automation_productivity**alpha
    r = tech.automation_productivity ** (1.0 - alpha) * m
    return w, r


def h_factor(tech: Technology, alpha: float) -> float:
    """Output per unit of the combined input bundle, Y = h * (A L + B K)."""
    return margin_factor(alpha) / tech.automation_productivity**alpha


def production(K1: float, effective_labor: float, alpha: float) -> float:
    if K1 <= 0.0 or effective_labor <= 0.0:
        return 0.0
    return K1**alpha * effective_labor ** (1.0 - alpha)


def allocate_from_labor(K: float, L: float, tech: Technology, alpha: float) -> Allocation:
    """Solve a period in which labor is the given quantity.

    Tries the interior branch first; if the implied automation stock would be
    negative (or negligibly positive), falls back to the corner where
    automation is idle. L = 0 dispatches to the free-output post-labor state.
    """
    if L <= 0.0:
        return postlabor_allocation(K, tech, alpha)
    w, r = reduced_prices(tech, alpha)
    Y = w * L + r * K
    K1 = alpha * Y / r
    K2 = K - K1
    if K2 > CORNER_TOL * max(K, 1.0):
        return Allocation(Y=Y, K=K, K1=K1, K2=K2, L=L, r=r, w=w, regime=INTERIOR)
    # corner: all capital is traditional, prices are marginal products
    Y = production(K, tech.labor_productivity * L, alpha)
    w = (1.0 - alpha) * Y / L
    r = alpha * Y / K
    return Allocation(Y=Y, K=K, K1=K, K2=0.0, L=L, r=r, w=w, regime=CORNER)


def postlabor_allocation(
    K: float, tech: Technology, alpha: float, Y: float | None = None
) -> Allocation:
    """State with zero labor. Pass Y to impose a pinned output path."""
    K1 = alpha * K
    K2 = (1.0 - alpha) * K
    if Y is None:
        _, r = reduced_prices(tech, alpha)
        Y = r * K
    else:
        r = Y / K
    return Allocation(Y=Y, K=K, K1=K1, K2=K2, L=0.0, r=r, w=0.0, regime=POST_LABOR)


def step_capital(K: float, Y: float, s: float, theta: float) -> float:
    """Capital carried into the next period: survivors plus saved output."""
    return (1.0 - theta) * K + s * Y


def _rel(x: float, scale: float) -> float:
    return x / max(abs(scale), 1.0)


def residuals(snap: Snapshot, params: ModelParams) -> dict[str, float]:
    """Named identity residuals of a snapshot, scaled to be comparable.

    Equality residuals should vanish for any state produced by this package,
    with two deliberate exceptions. At the corner the automation price
    condition becomes a no-unexploited-profit inequality, reported as
    "automation_margin" (positive only if using an idle machine would have
    beaten hiring). Post-labor states with a pinned output path override the
    technology frontier, so their "production" entry honestly reports the gap
    between the pinned path and what the frontier would produce.

    The labor supply condition is checked for each financing regime that is
    defined; the wage enters the denominator, so post-labor states (zero wage)
    report supply slack of exactly zero instead.
    """
    a = params.alpha
    n = params.population
    d = params.disincentive
    tech = snap.tech
    A = tech.labor_productivity
    B = tech.automation_productivity
    Q = tech.labor_quality
    eff = snap.effective_labor
    out: dict[str, float] = {}

    out["production"] = _rel(snap.Y - production(snap.K1, eff, a), snap.Y)
    out["capital_split"] = _rel(snap.K - snap.K1 - snap.K2, snap.K)
    out["income"] = _rel(snap.Y - snap.w * snap.L - snap.r * snap.K, snap.Y)
    out["traditional_return"] = _rel(a * snap.Y - snap.r * snap.K1, snap.Y)
    if snap.L > 0.0:
        out["wage_bill"] = _rel((1.0 - a) * A * snap.Y - snap.w * eff, snap.Y)
    if snap.regime == CORNER:
        # inequality slack: automation must not be strictly profitable while idle
        out["automation_margin"] = max(0.0, _rel(snap.w * B - snap.r * A, snap.r * A))
    else:
        out["automation_return"] = _rel((1.0 - a) * B * snap.Y - snap.r * eff, snap.Y)

    out["budget_flat"] = _rel(
        n * snap.G - snap.t * (snap.r * snap.K + snap.w * snap.L), snap.Y
    )
    if snap.G_public is not None and snap.t_wage is not None:
        out["budget_public"] = _rel(
            n * snap.G_public - snap.r * snap.K - snap.t_wage * snap.w * snap.L, snap.Y
        )
    if snap.w > 0.0:
        out["supply_flat"] = _rel(
            snap.L - (n - d * snap.G / (snap.w * (1.0 - snap.t) * Q)), n
        )
        if snap.G_public is not None and snap.t_wage is not None:
            out["supply_public"] = _rel(
                snap.L - (n - d * snap.G_public / (snap.w * (1.0 - snap.t_wage) * Q)), n
            )
    # saving is definitional (investment is s * Y by construction), recorded
    # for completeness so the suite covers the whole equation system
    out["investment"] = 0.0
    return out
