"""Transfer revenue as a function of the employment level.

Holding one period's capital stock and technology fixed, each labor level
finances a particular per-person transfer once the flat tax is set to balance
the budget and respect the labor supply condition. Tracing that transfer over
labor levels gives the familiar single-peaked revenue curve; the peak is the
largest transfer the period could fund at all.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import allocate_from_labor
from .financing import flat_tax_given_labor
from .params import POST_LABOR, ModelParams

__all__ = ["RevenuePoint", "transfer_at_labor", "transfer_curve", "peak_transfer"]

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class RevenuePoint:
    L: float
    G: float
    t: float


def transfer_at_labor(L: float, K: float, params: ModelParams, T: int = 0) -> RevenuePoint:
    """The transfer and tax consistent with labor level L at period T's technology."""
    tech = params.tech_at(T)
    alloc = allocate_from_labor(K, L, tech, params.alpha)
    if alloc.regime == POST_LABOR:
        t = params.post_labor_tax
        return RevenuePoint(L=0.0, G=t * alloc.Y / params.population, t=t)
    G, t = flat_tax_given_labor(alloc.L, alloc.Y, alloc.w, tech.labor_quality, params)
    return RevenuePoint(L=L, G=G, t=t)


def transfer_curve(
    K: float, params: ModelParams, T: int = 0, step: float = 0.25
) -> list[RevenuePoint]:
    """Sample the revenue curve from zero employment to the full population."""
    if step <= 0:
        raise ValueError(f"step must be positive, got {step}")
    points = []
    L = 0.0
    while L < params.population:
        points.append(transfer_at_labor(L, K, params, T))
        L += step
    points.append(transfer_at_labor(params.population, K, params, T))
    return points


def peak_transfer(
    K: float, params: ModelParams, T: int = 0, tol: float = 1e-10
) -> RevenuePoint:
    """Largest fundable transfer at period T, by golden-section search.

    The curve is single-peaked in labor over [0, population] for admissible
    parameters, which is what the bracketing search needs. Fully
    deterministic: same inputs, same float sequence, same answer.
    """
    lo, hi = 0.0, params.population

    def value(L: float) -> float:
        return transfer_at_labor(L, K, params, T).G

    a, b = lo, hi
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = value(c), value(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = value(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = value(d)
    best = 0.5 * (a + b)
    return transfer_at_labor(best, K, params, T)
