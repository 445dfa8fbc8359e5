"""Parameter and state containers.

The economy produces one good. Traditional capital cooperates with an
effective labor aggregate under a Cobb-Douglas technology; automation capital
enters that aggregate as a perfect substitute for labor, one machine-unit
standing in for a fixed number of worker-units. Redistribution is financed in
one of two ways, carried side by side in every snapshot: a single tax rate on
all income, or confiscation of capital income topped up by a wage tax.
Workers withdraw hours as the transfer makes not working affordable, which is
what ties redistribution to labor supply.

Periods are indexed from the calibrated start, T = 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = [
    "Technology",
    "GrowthRates",
    "ModelParams",
    "Snapshot",
    "FLAT_TAX",
    "PUBLIC_CAPITAL",
]

# Financing regime tags. Flat tax: one rate on all income funds the transfer.
# Public capital: capital income is socialized and wages are taxed on top.
FLAT_TAX = "flat_tax"
PUBLIC_CAPITAL = "public_capital"

INTERIOR = "interior"
CORNER = "corner"
POST_LABOR = "post_labor"


@dataclass(frozen=True)
class Technology:
    """Exogenous productivity levels in effect at a single period."""

    labor_productivity: float
    automation_productivity: float
    labor_quality: float = 1.0

    def scaled(self, automation_factor: float = 1.0) -> "Technology":
        """A copy with automation productivity scaled, for paired experiments."""
        return Technology(
            self.labor_productivity,
            self.automation_productivity * automation_factor,
            self.labor_quality,
        )


@dataclass(frozen=True)
class GrowthRates:
    """Per-period geometric growth rates of the three technology levels."""

    labor_productivity: float = 0.0
    automation_productivity: float = 0.0
    labor_quality: float = 0.0


@dataclass(frozen=True)
class ModelParams:
    """Everything exogenous: technology path, accumulation and policy constants.

    Technology follows closed-form geometric paths anchored at T = 0. Anchoring
    matters: a scenario phase that changes growth rates re-extrapolates from the
    same anchor rather than compounding from the switch period, so identical
    inputs always reproduce identical levels bit for bit.
    """

    base_tech: Technology
    growth: GrowthRates = field(default_factory=GrowthRates)
    alpha: float = 0.25
    population: float = 100.0
    disincentive: float = 25.0
    theta: float = 0.02
    s: float = 0.15
    post_labor_tax: float = 0.5
    abundance_fraction: float = 0.25
    financing: str = FLAT_TAX

    def __post_init__(self):
        problems = []
        if not 0.0 < self.alpha < 1.0:
            problems.append(f"alpha must lie strictly in (0, 1), got {self.alpha}")
        if self.population <= 0:
            problems.append(f"population must be positive, got {self.population}")
        if self.disincentive <= 0:
            problems.append(f"disincentive must be positive, got {self.disincentive}")
        if not 0.0 <= self.theta <= 1.0:
            problems.append(f"theta must lie in [0, 1], got {self.theta}")
        if not 0.0 < self.s <= 1.0:
            problems.append(f"s must lie in (0, 1], got {self.s}")
        if not 0.5 <= self.post_labor_tax <= 1.0:
            problems.append(
                f"post_labor_tax must lie in [0.5, 1], got {self.post_labor_tax}"
            )
        if not 0.0 < self.abundance_fraction <= 1.0:
            problems.append(
                f"abundance_fraction must lie in (0, 1], got {self.abundance_fraction}"
            )
        if self.financing not in (FLAT_TAX, PUBLIC_CAPITAL):
            problems.append(f"unknown financing regime {self.financing!r}")
        if problems:
            raise ValueError("; ".join(problems))

    def tech_at(self, T: int) -> Technology:
        g = self.growth
        b = self.base_tech
        return Technology(
            b.labor_productivity * (1.0 + g.labor_productivity) ** T,
            b.automation_productivity * (1.0 + g.automation_productivity) ** T,
            b.labor_quality * (1.0 + g.labor_quality) ** T,
        )


@dataclass(frozen=True)
class Snapshot:
    """Fully solved state of one period.

    Both financing regimes are reported for the same real allocation: G and t
    belong to the flat-tax regime, G_public and t_wage to the public-capital
    regime. The pair shares the labor supply condition, which pins the identity
    G / (1 - t) = G_public / (1 - t_wage) whenever both are defined. When the
    public-capital regime cannot fund the required transfer with a nonnegative
    wage tax, its two fields are None.

    regime records which production branch applied: "interior" when automation
    capital is in active use, "corner" when it is unprofitable and idle, and
    "post_labor" once nobody works.
    """

    T: int
    Y: float
    K: float
    K1: float
    K2: float
    L: float
    r: float
    w: float
    G: float
    t: float
    G_public: float | None
    t_wage: float | None
    tech: Technology
    regime: str

    @property
    def capital_share(self) -> float:
        return self.r * self.K / self.Y

    @property
    def net_return(self) -> float:
        return self.r * (1.0 - self.t)

    @property
    def net_wage(self) -> float:
        return self.w * (1.0 - self.t)

    @property
    def effective_labor(self) -> float:
        """Labor-equivalent input: workers plus machine stand-ins."""
        return (
            self.tech.labor_productivity * self.L
            + self.tech.automation_productivity * self.K2
        )
