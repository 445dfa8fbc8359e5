"""Closure rules.

Within a period, once the inherited capital stock and the technology levels
are fixed, the accounting and pricing identities leave exactly one degree of
freedom. Nothing inside the model picks the point on that one-parameter
family; a closure rule does. Each closure pins a different quantity and backs
the rest out:

    PinnedLabor     labor follows a given path
    PinnedTax       the flat tax rate follows a given path
    PinnedTransfer  the per-person transfer follows a given path
    PinnedOutput    output follows a given path

All four produce full snapshots with both financing regimes filled in, and
all are deterministic closed forms (the pinned-transfer corner case brackets
a root, still deterministically).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence, Union

from .core import Allocation, allocate_from_labor, postlabor_allocation, reduced_prices
from .errors import ClosureInfeasibleError, InfeasibleTransferError
from .financing import (
    corner_labor_given_flat_tax,
    corner_labor_given_transfer,
    flat_tax_given_labor,
    flat_tax_given_transfer,
    labor_given_flat_tax,
    public_capital_given_labor,
)
from .params import CORNER, POST_LABOR, PUBLIC_CAPITAL, ModelParams, Snapshot

__all__ = [
    "PathLike",
    "as_path",
    "PinnedLabor",
    "PinnedTax",
    "PinnedTransfer",
    "PinnedOutput",
    "finish_snapshot",
]

PathLike = Union[float, int, Callable[[int], float], Mapping[int, float], Sequence[float]]


def as_path(value: PathLike) -> Callable[[int], float]:
    """Normalize the ways a pinned path can be written down into a callable.

    Scalars become constant paths. Mappings {period: level} interpolate
    linearly between their knots and clamp outside them. Sequences are read
    by period index. Callables pass through.
    """
    if callable(value):
        return value
    if isinstance(value, Mapping):
        knots = sorted(int(k) for k in value)
        levels = {int(k): float(v) for k, v in value.items()}
        if not knots:
            raise ValueError("empty path mapping")

        def interpolated(T: int) -> float:
            if T <= knots[0]:
                return levels[knots[0]]
            if T >= knots[-1]:
                return levels[knots[-1]]
            for left, right in zip(knots, knots[1:]):
                if left <= T <= right:
                    f = (T - left) / (right - left)
                    return levels[left] * (1.0 - f) + levels[right] * f
            raise AssertionError("unreachable: knots are sorted")

        return interpolated
    if isinstance(value, (int, float)):
        level = float(value)
        return lambda T: level
    if isinstance(value, Sequence):
        seq = [float(v) for v in value]

        def indexed(T: int) -> float:
            if not 0 <= T < len(seq):
                raise ClosureInfeasibleError(
                    T, "path", f"path sequence covers periods 0..{len(seq) - 1}"
                )
            return seq[T]

        return indexed
    raise TypeError(f"cannot interpret {type(value).__name__} as a path")


def finish_snapshot(T: int, alloc: Allocation, params: ModelParams) -> Snapshot:
    """Attach both financing regimes to a solved real allocation."""
    tech = params.tech_at(T)
    n = params.population
    if alloc.regime == POST_LABOR:
        # All income is capital income. The flat-tax regime keeps whatever
        # rate policy configures for the workless era; the public-capital
        # regime hands the whole product out, with the wage tax moot.
        t = params.post_labor_tax
        G = t * alloc.Y / n
        G_public = alloc.Y / n
        t_wage = 0.0
    else:
        Q = tech.labor_quality
        G, t = flat_tax_given_labor(alloc.L, alloc.Y, alloc.w, Q, params)
        try:
            G_public, t_wage = public_capital_given_labor(
                alloc.L, alloc.Y, alloc.w, alloc.r, alloc.K, Q, params
            )
        except InfeasibleTransferError:
            if params.financing == PUBLIC_CAPITAL:
                raise
            G_public, t_wage = None, None
    return Snapshot(
        T=T,
        Y=alloc.Y,
        K=alloc.K,
        K1=alloc.K1,
        K2=alloc.K2,
        L=alloc.L,
        r=alloc.r,
        w=alloc.w,
        G=G,
        t=t,
        G_public=G_public,
        t_wage=t_wage,
        tech=tech,
        regime=alloc.regime,
    )


@dataclass(frozen=True)
class PinnedLabor:
    """Labor follows a given path; output and prices follow from it."""

    path: PathLike
    name: str = "pinned_labor"

    def complete(self, T: int, K: float, params: ModelParams) -> Snapshot:
        L = as_path(self.path)(T)
        if L > params.population:
            raise ClosureInfeasibleError(
                T, self.name, f"pinned labor {L:.6g} exceeds population"
            )
        tech = params.tech_at(T)
        alloc = allocate_from_labor(K, L, tech, params.alpha)
        return finish_snapshot(T, alloc, params)


@dataclass(frozen=True)
class PinnedTax:
    """The flat tax rate follows a given path; labor adjusts to it."""

    path: PathLike
    name: str = "pinned_tax"

    def complete(self, T: int, K: float, params: ModelParams) -> Snapshot:
        t = as_path(self.path)(T)
        if not 0.0 <= t < 1.0:
            raise ClosureInfeasibleError(
                T, self.name, f"pinned tax {t:.6g} outside [0, 1)"
            )
        tech = params.tech_at(T)
        Q = tech.labor_quality
        w, r = reduced_prices(tech, params.alpha)
        L = labor_given_flat_tax(t, K, w, r, Q, params)
        alloc = allocate_from_labor(K, L, tech, params.alpha) if L > 0.0 else None
        if alloc is not None and alloc.regime == CORNER:
            L = corner_labor_given_flat_tax(t, Q, params)
            alloc = allocate_from_labor(K, L, tech, params.alpha)
        if alloc is None or alloc.L <= 0.0:
            raise ClosureInfeasibleError(
                T, self.name, f"pinned tax {t:.6g} drives labor to zero"
            )
        return finish_snapshot(T, alloc, params)


@dataclass(frozen=True)
class PinnedTransfer:
    """The per-person transfer follows a given path; tax and labor adjust."""

    path: PathLike
    name: str = "pinned_transfer"

    def complete(self, T: int, K: float, params: ModelParams) -> Snapshot:
        G = as_path(self.path)(T)
        if G < 0.0:
            raise ClosureInfeasibleError(T, self.name, f"negative transfer {G:.6g}")
        tech = params.tech_at(T)
        Q = tech.labor_quality
        w, r = reduced_prices(tech, params.alpha)
        try:
            t = flat_tax_given_transfer(G, w, r, K, Q, params)
            L = labor_given_flat_tax(t, K, w, r, Q, params)
            alloc = allocate_from_labor(K, L, tech, params.alpha) if L > 0.0 else None
            if alloc is not None and alloc.regime == CORNER:
                L = corner_labor_given_transfer(G, K, tech, params)
                alloc = allocate_from_labor(K, L, tech, params.alpha)
        except InfeasibleTransferError as exc:
            raise ClosureInfeasibleError(T, self.name, exc.detail) from exc
        if alloc is None or alloc.L <= 0.0:
            raise ClosureInfeasibleError(
                T, self.name, f"pinned transfer {G:.6g} drives labor to zero"
            )
        return finish_snapshot(T, alloc, params)


@dataclass(frozen=True)
class PinnedOutput:
    """Output follows a given path; labor absorbs the slack.

    This is the regime under which economies differing only in saving or in
    automation productivity share an output path exactly, which the paired
    comparisons and the adoption-road scenarios rely on. Once the path calls
    for less output than capital alone would yield, the run crosses into the
    post-labor state and the return is read off the path as Y / K.
    """

    path: PathLike
    name: str = "pinned_output"

    def complete(self, T: int, K: float, params: ModelParams) -> Snapshot:
        Y = as_path(self.path)(T)
        if Y <= 0.0:
            raise ClosureInfeasibleError(T, self.name, f"pinned output {Y:.6g} not positive")
        tech = params.tech_at(T)
        alpha = params.alpha
        w, r = reduced_prices(tech, alpha)
        L = (Y - r * K) / w
        if L <= 0.0:
            alloc = postlabor_allocation(K, tech, alpha, Y=Y)
            return finish_snapshot(T, alloc, params)
        K1 = alpha * Y / r
        if K - K1 <= 0.0:
            # corner: invert the no-automation production function for labor
            L = (Y / K**alpha) ** (1.0 / (1.0 - alpha)) / tech.labor_productivity
        if L > params.population:
            raise ClosureInfeasibleError(
                T,
                self.name,
                f"pinned output {Y:.6g} needs labor {L:.6g} beyond population",
            )
        alloc = allocate_from_labor(K, L, tech, alpha)
        return finish_snapshot(T, alloc, params)
