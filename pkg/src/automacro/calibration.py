"""Back out technology levels and the disincentive scale from a start state.

The calibrated start is a corner state: automation capital exists as a
technology but is not yet worth using, so traditional capital and labor
produce everything and factor prices are their marginal products. Machine
productivity is then set so that using a machine is exactly break-even at
those prices, which is what lets automation take off the moment its
productivity starts growing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConfigError
from .params import Technology

__all__ = ["CalibrationTargets", "Calibrated", "calibrate"]


@dataclass(frozen=True)
class CalibrationTargets:
    """Observed start-state values the calibration must reproduce."""

    Y: float = 100.0
    K: float = 500.0
    L: float = 75.0
    population: float = 100.0
    alpha: float = 0.25
    tax: float = 0.5
    transfer: float = 0.5
    labor_quality: float = 1.0


@dataclass(frozen=True)
class Calibrated:
    """Calibration output: technology levels plus implied start prices."""

    tech: Technology
    disincentive: float
    r: float
    w: float
    withdrawal_elasticity: float

    def as_dict(self) -> dict:
        return {
            "labor_productivity": self.tech.labor_productivity,
            "automation_productivity": self.tech.automation_productivity,
            "labor_quality": self.tech.labor_quality,
            "disincentive": self.disincentive,
            "r": self.r,
            "w": self.w,
            "withdrawal_elasticity": self.withdrawal_elasticity,
        }


def calibrate(targets: CalibrationTargets = CalibrationTargets()) -> Calibrated:
    """Solve the start-state identities for the model constants.

    Closed form throughout:

    * prices are marginal products of the corner technology,
    * labor productivity inverts the production function,
    * automation productivity makes machines break-even, B = A * r / w,
    * the disincentive scale makes the supply condition hold with the
      target transfer and tax.

    Raises ConfigError when the targets violate the budget identity
    n G = t (r K + w L), since no parameterization can then reproduce them.
    """
    tg = targets
    if min(tg.Y, tg.K, tg.L, tg.population) <= 0:
        raise ConfigError("calibration targets Y, K, L, population must be positive")
    if not 0.0 < tg.alpha < 1.0:
        raise ConfigError(f"alpha must lie strictly in (0, 1), got {tg.alpha}")
    if not 0.0 < tg.tax < 1.0:
        raise ConfigError(f"target tax must lie strictly in (0, 1), got {tg.tax}")
    if tg.L >= tg.population:
        raise ConfigError("target labor must leave somebody out of work")

    r = tg.alpha * tg.Y / tg.K
    w = (1.0 - tg.alpha) * tg.Y / tg.L
    budget_gap = tg.population * tg.transfer - tg.tax * (r * tg.K + w * tg.L)
    if abs(budget_gap) > 1e-9 * tg.Y:
        raise ConfigError(
            f"calibration targets violate the budget identity by {budget_gap:.6g}; "
            "transfer, tax and income targets are mutually inconsistent"
        )

    labor_productivity = (tg.Y / tg.K**tg.alpha) ** (1.0 / (1.0 - tg.alpha)) / tg.L
    automation_productivity = labor_productivity * r / w
    disincentive = (
        (tg.population - tg.L) * w * (1.0 - tg.tax) * tg.labor_quality / tg.transfer
    )
    return Calibrated(
        tech=Technology(
            labor_productivity=labor_productivity,
            automation_productivity=automation_productivity,
            labor_quality=tg.labor_quality,
        ),
        disincentive=disincentive,
        r=r,
        w=w,
        withdrawal_elasticity=(tg.population - tg.L) / tg.L,
    )
