"""Typed errors shared across the package.

The CLI maps these onto exit codes: configuration problems exit 1,
golden-table mismatches exit 2, solver infeasibility exits 3.
"""

from __future__ import annotations


class AutomacroError(Exception):
    """Base class for everything raised deliberately by this package."""


class ConfigError(AutomacroError):
    """Invalid run configuration. Carries every problem found, not just the first."""

    def __init__(self, problems):
        if isinstance(problems, str):
            problems = [problems]
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


class InfeasibleTransferError(AutomacroError):
    """The requested transfer cannot be financed at any admissible tax rate."""

    def __init__(self, detail, period=None):
        self.period = period
        self.detail = detail
        where = f" at period {period}" if period is not None else ""
        super().__init__(f"infeasible transfer{where}: {detail}")


class ClosureInfeasibleError(AutomacroError):
    """A closure rule could not complete some period's state."""

    def __init__(self, period, closure, detail):
        self.period = period
        self.closure = closure
        self.detail = detail
        super().__init__(f"closure {closure} infeasible at period {period}: {detail}")


class CoverageError(AutomacroError):
    """A trajectory does not cover the periods a verification needs."""


class ComparisonError(AutomacroError):
    """A paired-economy comparison was requested under incompatible settings."""
