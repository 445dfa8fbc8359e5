"""Deterministic simulator of growth with labor-substitutable automation.

One good is produced from traditional capital and an effective labor
aggregate in which machines substitute for workers one-for-a-fixed-rate.
Within each period the accounting identities leave one degree of freedom,
closed by an explicit closure rule; capital accumulation links periods.
Transfers are financed by a flat income tax or by socialized capital income
plus a wage tax, and the package carries both regimes side by side.

Typical use:

    from automacro import calibrate, reproduction_spec, run_scenario

    trajectory = run_scenario(reproduction_spec("T1"))
    trajectory.snapshot(50).L
"""

from .calibration import CalibrationTargets, Calibrated, calibrate
from .closures import PinnedLabor, PinnedOutput, PinnedTax, PinnedTransfer, as_path
from .comparison import compare_productivity, compare_savings
from .core import (
    Allocation,
    allocate_from_labor,
    postlabor_allocation,
    reduced_prices,
    residuals,
    step_capital,
)
from .criteria import CriteriaReport, evaluate_criteria
from .errors import (
    AutomacroError,
    ClosureInfeasibleError,
    ComparisonError,
    ConfigError,
    CoverageError,
    InfeasibleTransferError,
)
from .financing import (
    flat_tax_given_labor,
    flat_tax_given_transfer,
    labor_given_flat_tax,
    public_capital_given_labor,
    transfer_tax_candidates,
)
from .goldens import TABLES, GoldenTable
from .laffer import peak_transfer, transfer_at_labor, transfer_curve
from .params import (
    FLAT_TAX,
    PUBLIC_CAPITAL,
    GrowthRates,
    ModelParams,
    Snapshot,
    Technology,
)
from .config import RunConfig, config_hash, load_config, shipped_config_path
from .output import emit_outputs
from .scenarios import (
    BASELINE_GROWTH,
    POLICY_FREEZE_GROWTH,
    ROAD_FAST_GROWTH,
    ROAD_SLOW_GROWTH,
    Phase,
    ScenarioSpec,
    Trajectory,
    calibrated_params,
    policy_freeze_generating_spec,
    replay_suffix,
    reproduction_spec,
    run_scenario,
    shared_output_road,
    splice_phase,
    stationary_spec,
    stitch,
)
from .verify import VerificationReport, verify_trajectory

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "AutomacroError",
    "ConfigError",
    "InfeasibleTransferError",
    "ClosureInfeasibleError",
    "CoverageError",
    "ComparisonError",
    "Technology",
    "GrowthRates",
    "ModelParams",
    "Snapshot",
    "FLAT_TAX",
    "PUBLIC_CAPITAL",
    "Allocation",
    "allocate_from_labor",
    "postlabor_allocation",
    "reduced_prices",
    "residuals",
    "step_capital",
    "CalibrationTargets",
    "Calibrated",
    "calibrate",
    "flat_tax_given_labor",
    "public_capital_given_labor",
    "transfer_tax_candidates",
    "flat_tax_given_transfer",
    "labor_given_flat_tax",
    "PinnedLabor",
    "PinnedTax",
    "PinnedTransfer",
    "PinnedOutput",
    "as_path",
    "Phase",
    "ScenarioSpec",
    "Trajectory",
    "run_scenario",
    "splice_phase",
    "stitch",
    "replay_suffix",
    "calibrated_params",
    "reproduction_spec",
    "policy_freeze_generating_spec",
    "stationary_spec",
    "shared_output_road",
    "BASELINE_GROWTH",
    "POLICY_FREEZE_GROWTH",
    "ROAD_SLOW_GROWTH",
    "ROAD_FAST_GROWTH",
    "CriteriaReport",
    "evaluate_criteria",
    "compare_savings",
    "compare_productivity",
    "peak_transfer",
    "transfer_curve",
    "transfer_at_labor",
    "GoldenTable",
    "TABLES",
    "VerificationReport",
    "verify_trajectory",
    "RunConfig",
    "load_config",
    "config_hash",
    "shipped_config_path",
    "emit_outputs",
]
