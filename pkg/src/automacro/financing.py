"""Transfer and tax determination.

Two financing regimes fund a uniform per-person transfer:

flat tax
    One rate t on all income. The budget n G = t (r K + w L) and the labor
    supply condition L = n - disincentive * G / (w (1 - t) Q) jointly pin
    (G, t) once the real allocation is known.

public capital
    Capital income goes to the public purse in full and wages are taxed at
    t_wage on top, n G = r K + t_wage * w L. Same supply condition with
    (G, t_wage) in place of (G, t). When capital income alone already exceeds
    what the supply condition permits, no nonnegative wage tax works and the
    regime is infeasible.

Everything here is closed form. Inverse problems (tax from a pinned transfer,
labor from a pinned tax) are also closed form except the corner case of a
pinned transfer, which brackets a root instead.
"""

from __future__ import annotations

import math

from scipy.optimize import brentq

from .errors import InfeasibleTransferError
from .params import ModelParams, Technology

__all__ = [
    "flat_tax_given_labor",
    "public_capital_given_labor",
    "transfer_tax_candidates",
    "flat_tax_given_transfer",
    "labor_given_flat_tax",
    "corner_labor_given_flat_tax",
    "corner_labor_given_transfer",
]


def flat_tax_given_labor(
    L: float, Y: float, w: float, Q: float, params: ModelParams
) -> tuple[float, float]:
    """Flat-tax transfer and rate consistent with a known allocation.

    Eliminating G between budget and supply gives t / (1 - t) =
    (n - L) n w Q / (disincentive * Y), so the rate follows directly from how
    many hours are withheld.
    """
    n = params.population
    c = (n - L) * n * w * Q / (params.disincentive * Y)
    t = c / (1.0 + c)
    return t * Y / n, t


def public_capital_given_labor(
    L: float, Y: float, w: float, r: float, K: float, Q: float, params: ModelParams
) -> tuple[float, float]:
    """Public-capital transfer and wage tax for a known allocation.

    Raises InfeasibleTransferError when the supply condition would require a
    negative wage tax, i.e. capital income alone overshoots the transfer the
    withheld hours imply.
    """
    n = params.population
    a = n * (n - L) * w * Q / params.disincentive
    denom = a + w * L
    t_wage = (a - r * K) / denom
    if t_wage < 0.0:
        raise InfeasibleTransferError(
            f"capital income {r * K:.6g} exceeds the feasible transfer budget "
            f"{a:.6g}; wage tax would be negative"
        )
    G = (r * K + t_wage * w * L) / n
    return G, t_wage


def transfer_tax_candidates(
    G: float, w: float, r: float, K: float, Q: float, params: ModelParams
) -> tuple[float, float]:
    """Both tax rates that would fund a pinned transfer, interior prices.

    Substituting the supply condition into the budget yields a quadratic in
    u = 1 - t:

        (w n + r K) u^2 + (n G - w n - r K - D) u + D = 0,
        D = disincentive * G / Q.

    Both roots can lie in (0, 1); they are the two sides of the transfer
    revenue curve, the same sum raised with low tax and high labor or high
    tax and depressed labor. Returned as (low tax, high-tax twin).
    """
    n = params.population
    C = w * n + r * K
    D = params.disincentive * G / Q
    b = n * G - C - D
    disc = b * b - 4.0 * C * D
    if disc < 0.0:
        raise InfeasibleTransferError(
            f"transfer {G:.6g} lies beyond the revenue peak for these prices"
        )
    root = math.sqrt(disc)
    u_keep = (-b + root) / (2.0 * C)
    u_twin = (-b - root) / (2.0 * C)
    return 1.0 - u_keep, 1.0 - u_twin


def flat_tax_given_transfer(
    G: float, w: float, r: float, K: float, Q: float, params: ModelParams
) -> float:
    """Flat-tax rate that funds a pinned per-person transfer, interior prices.

    Of the two candidate rates the smaller is kept; the high-tax twin raises
    the same revenue from a depressed labor supply and is rejected.
    """
    t, _ = transfer_tax_candidates(G, w, r, K, Q, params)
    u = 1.0 - t
    if not 0.0 < u <= 1.0:
        raise InfeasibleTransferError(
            f"transfer {G:.6g} admits no tax rate in [0, 1): kept root 1-t={u:.6g}"
        )
    return t


def labor_given_flat_tax(
    t: float, K: float, w: float, r: float, Q: float, params: ModelParams
) -> float:
    """Labor supplied under a pinned flat-tax rate, interior prices.

    From t / (1 - t) = (n - L) n w Q / (disincentive * (w L + r K)).
    """
    n = params.population
    c = t / (1.0 - t)
    d = params.disincentive
    return (n * n * w * Q - c * d * r * K) / (w * (c * d + n * Q))


def corner_labor_given_flat_tax(t: float, Q: float, params: ModelParams) -> float:
    """Labor under a pinned flat-tax rate when automation is idle.

    At the corner the wage is labor's marginal product, and the wage level
    cancels out of the supply condition entirely.
    """
    n = params.population
    c = t / (1.0 - t)
    share = n * (1.0 - params.alpha) * Q
    return n * share / (c * params.disincentive + share)


def corner_labor_given_transfer(
    G: float, K: float, tech: Technology, params: ModelParams
) -> float:
    """Labor funding a pinned transfer when automation is idle.

    No closed form here (the wage moves with labor), so bracket the
    high-labor root of the budget-supply system and solve numerically.
    """
    from .core import production  # local import avoids a cycle

    n = params.population
    a = params.alpha
    Q = tech.labor_quality

    def gap(L: float) -> float:
        Y = production(K, tech.labor_productivity * L, a)
        w = (1.0 - a) * Y / L
        implied_G, _ = flat_tax_given_labor(L, Y, w, Q, params)
        return implied_G - G

    # The transfer curve rises from the high-labor end toward its peak, so
    # walk down from full employment until the pinned level is bracketed.
    hi = n * (1.0 - 1e-12)
    if gap(hi) > 0.0:
        raise InfeasibleTransferError(
            f"transfer {G:.6g} is below what full employment already yields"
        )
    lo = hi
    step = n / 64.0
    while lo > step:
        lo -= step
        if gap(lo) > 0.0:
            return brentq(gap, lo, lo + step, xtol=1e-13, rtol=8.9e-16)
    raise InfeasibleTransferError(
        f"transfer {G:.6g} lies beyond the revenue peak at this corner state"
    )
