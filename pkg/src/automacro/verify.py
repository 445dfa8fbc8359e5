"""Compare a trajectory against a golden table, cell by cell.

The contract is printed precision: a computed value matches a printed cell
when it lies within one unit of the cell's last printed place. The report
keeps every cell, matched or not, so a mismatch can be read with its
neighborhood instead of alone.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CoverageError
from .goldens import GoldenTable
from .scenarios import Trajectory

__all__ = ["CellCheck", "VerificationReport", "verify_trajectory"]


@dataclass(frozen=True)
class CellCheck:
    T: int
    column: str
    printed: str
    expected: float
    actual: float
    tolerance: float
    ok: bool

    @property
    def diff(self) -> float:
        return self.actual - self.expected


@dataclass
class VerificationReport:
    table_id: str
    checks: list[CellCheck]

    @property
    def mismatches(self) -> list[CellCheck]:
        return [c for c in self.checks if not c.ok]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        lines = [
            f"{self.table_id}: {len(self.checks)} cells, "
            f"{len(self.mismatches)} beyond printed precision"
        ]
        for c in self.mismatches:
            lines.append(
                f"  T={c.T:<3d} {c.column:<9s} expected {c.printed:>8s} "
                f"({c.expected:g}) got {c.actual:.4f} (diff {c.diff:+.3f}, "
                f"tol {c.tolerance:g})"
            )
        return "\n".join(lines)


def verify_trajectory(
    trajectory: Trajectory,
    golden: GoldenTable,
    tolerance_overrides: dict[str, float] | None = None,
) -> VerificationReport:
    """Check every printed cell of `golden` against the trajectory.

    Raises CoverageError when the trajectory does not span the table's
    periods. `tolerance_overrides` widens (or narrows) specific columns,
    keyed by column name, in model units.
    """
    overrides = tolerance_overrides or {}
    missing = [
        T
        for T in golden.periods()
        if T < trajectory.start or T > trajectory.horizon
    ]
    if missing:
        raise CoverageError(
            f"trajectory [{trajectory.start}, {trajectory.horizon}] lacks "
            f"periods {missing} of table {golden.table_id}"
        )
    checks = []
    for T in golden.periods():
        snap = trajectory.snapshot(T)
        for col in golden.columns:
            actual = getattr(snap, col.name)
            if actual is None:
                actual = float("nan")
            expected = golden.value(T, col.name)
            tol = overrides.get(col.name, golden.tolerance(col.name))
            ok = abs(actual - expected) <= tol + 1e-12
            checks.append(
                CellCheck(
                    T=T,
                    column=col.name,
                    printed=golden.cell(T, col.name),
                    expected=expected,
                    actual=actual,
                    tolerance=tol,
                    ok=ok,
                )
            )
    return VerificationReport(table_id=golden.table_id, checks=checks)
