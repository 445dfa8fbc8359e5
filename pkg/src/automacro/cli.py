"""Command line surface.

Verbs:

    calibrate      solve the start state and print the implied constants
    run            run a config file, emit CSV/manifest/charts
    verify-tables  rerun the reference scenarios and diff against the
                   printed tables
    sweep          grid of runs over saving rates and closures, CSV summary
    compare        paired-economy comparisons (saving or productivity)
    laffer         revenue-curve diagnostics for one period

Exit codes: 0 success, 1 usage or configuration problem, 2 verification
mismatch, 3 solver infeasibility.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import __version__
from .calibration import calibrate
from .comparison import compare_productivity, compare_savings
from .config import config_hash, load_config, shipped_config_names, shipped_config_path
from .criteria import evaluate_criteria
from .errors import (
    ClosureInfeasibleError,
    ComparisonError,
    ConfigError,
    InfeasibleTransferError,
)
from .goldens import TABLES
from .laffer import peak_transfer, transfer_curve
from .output import criteria_dict, emit_outputs, verification_dict
from .scenarios import (
    policy_freeze_generating_spec,
    reproduction_spec,
    run_scenario,
)
from .verify import verify_trajectory

USAGE_ERROR, MISMATCH, INFEASIBLE = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; 2 is reserved for mismatches here
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _resolve_config(arg: str) -> Path:
    """A config argument is a file path, or the name of a shipped config."""
    p = Path(arg)
    if p.exists():
        return p
    return shipped_config_path(arg)


def cmd_calibrate(args) -> int:
    solved = calibrate()
    if args.json:
        print(json.dumps(solved.as_dict(), indent=2, sort_keys=True))
        return 0
    print("calibrated start state:")
    print(f"  labor productivity       {solved.tech.labor_productivity!r}")
    print(f"  automation productivity  {solved.tech.automation_productivity!r}")
    print(f"  labor quality            {solved.tech.labor_quality!r}")
    print(f"  disincentive scale       {solved.disincentive!r}")
    print(f"  return on capital        {solved.r:.4f} ({solved.r:.2%})")
    print(f"  wage                     {solved.w:.4f}")
    print(f"  withdrawal elasticity    {solved.withdrawal_elasticity:.6f}")
    return 0


def cmd_run(args) -> int:
    config = load_config(_resolve_config(args.config))
    spec = config.scenario_spec()
    trajectory = run_scenario(spec)
    reports = {}
    worst = 0
    for table_id in config.verify_tables:
        report = verify_trajectory(trajectory, TABLES[table_id])
        reports[table_id] = verification_dict(report)
        print(report.summary())
        if not report.ok:
            worst = MISMATCH
    if args.criteria:
        crit = evaluate_criteria(trajectory)
        reports["criteria"] = criteria_dict(crit)
        print(crit.summary())
    out_dir = args.out if args.out is not None else config.out_dir
    written = emit_outputs(
        trajectory,
        out_dir,
        emit_csv=config.emit_csv,
        emit_charts=config.emit_charts or args.charts,
        config_hash=config_hash(config),
        reports=reports or None,
    )
    for path in written:
        print(f"wrote {path}")
    return worst


def cmd_verify_tables(args) -> int:
    table_ids = args.tables or list(TABLES)
    worst = 0
    for table_id in table_ids:
        if table_id not in TABLES:
            print(f"unknown table {table_id!r}; know {sorted(TABLES)}", file=sys.stderr)
            return USAGE_ERROR
        if table_id == "T2" and not args.pinned_labor:
            # the one table whose generating closure is known exactly
            spec = policy_freeze_generating_spec()
        else:
            spec = reproduction_spec(table_id)
        report = verify_trajectory(run_scenario(spec), TABLES[table_id])
        print(report.summary())
        for miss in report.mismatches:
            print(
                f"  T={miss.T:>3} {miss.column:<4} printed {miss.printed:>8} "
                f"expected {miss.expected:.6g} got {miss.actual:.6g} "
                f"(off by {miss.diff:+.3f}, tolerance {miss.tolerance:g})"
            )
        if not report.ok:
            worst = MISMATCH
    return worst


def cmd_sweep(args) -> int:
    from dataclasses import replace

    rates = [float(x) for x in args.s.split(",")] if args.s else [0.15]
    closures = args.closures.split(",") if args.closures else ["pinned_labor"]
    base = reproduction_spec("T1")
    rows = []
    for s in rates:
        for closure_kind in closures:
            if closure_kind == "pinned_labor":
                closure = base.closure
            elif closure_kind == "pinned_tax":
                from .closures import PinnedTax

                closure = PinnedTax(0.5)
            elif closure_kind == "pinned_transfer":
                from .closures import PinnedTransfer

                closure = PinnedTransfer(0.5)
            else:
                print(
                    f"unknown closure {closure_kind!r} (sweep knows pinned_labor, "
                    "pinned_tax, pinned_transfer)",
                    file=sys.stderr,
                )
                return USAGE_ERROR
            spec = replace(
                base,
                params=replace(base.params, s=s),
                closure=closure,
                horizon=args.horizon,
                label=f"s={s} {closure_kind}",
            )
            trajectory = run_scenario(spec)
            crit = evaluate_criteria(trajectory)
            last = trajectory.snapshot(trajectory.horizon)
            rows.append({
                "s": s,
                "closure": closure_kind,
                "horizon": args.horizon,
                "Y_end": last.Y,
                "K_end": last.K,
                "L_end": last.L,
                "t_end": last.t,
                "G_end": last.G,
                "abundance_onset": crit.abundance_onset,
                "post_labor_onset": crit.post_labor_onset,
            })
    writer = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return 0


def cmd_compare(args) -> int:
    base = run_scenario(reproduction_spec("T1"))
    if args.which == "savings":
        result = compare_savings(base, args.s_low, args.s_high)
        print(f"saving pair on the baseline output path: s={args.s_low} vs {args.s_high}")
        print(f"  max identity residual: {result.max_residual():.3e}")
        for name, verdict in result.orderings.items():
            print(
                f"  {name:<28s} holds from T={verdict.holds_from}"
                f" (all periods: {verdict.holds_all})"
            )
    else:
        result = compare_productivity(base, args.factor)
        print(f"productivity pair on the baseline capital path: x{args.factor}")
        gap = max(result.return_ratio_gap.values())
        print(f"  max return-ratio gap: {gap:.3e}")
        for name, verdict in result.orderings.items():
            print(
                f"  {name:<28s} holds from T={verdict.holds_from}"
                f" (all periods: {verdict.holds_all})"
            )
    return 0


def cmd_laffer(args) -> int:
    from .scenarios import calibrated_params, BASELINE_GROWTH

    params = calibrated_params(BASELINE_GROWTH, s=0.15)
    peak = peak_transfer(args.capital, params, T=args.period)
    print(
        f"revenue peak at period {args.period}, capital {args.capital:g}: "
        f"transfer {peak.G:.6f} at labor {peak.L:.4f} (tax {peak.t:.4f})"
    )
    if args.out:
        points = transfer_curve(args.capital, params, T=args.period, step=args.step)
        with open(args.out, "w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(["L", "G", "t"])
            for point in points:
                writer.writerow([repr(point.L), repr(point.G), repr(point.t)])
        print(f"wrote {args.out}")
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="automacro", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"automacro {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("calibrate", help="solve the start state")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(fn=cmd_calibrate)

    p = sub.add_parser("run", help="run a config file")
    p.add_argument(
        "config",
        help=f"config file path, or a shipped name: {', '.join(shipped_config_names())}",
    )
    p.add_argument("--out", help="output directory (overrides the config)")
    p.add_argument("--charts", action="store_true", help="also write SVG charts")
    p.add_argument("--criteria", action="store_true", help="evaluate transition criteria")
    p.set_defaults(fn=cmd_run)

    p = sub.add_parser("verify-tables", help="diff reference runs against printed tables")
    p.add_argument("tables", nargs="*", help="table ids (default: all)")
    p.add_argument(
        "--pinned-labor",
        action="store_true",
        help="use the pinned-labor protocol even where the generating closure is known",
    )
    p.set_defaults(fn=cmd_verify_tables)

    p = sub.add_parser("sweep", help="grid of runs, CSV summary on stdout")
    p.add_argument("--s", help="comma-separated saving rates (default 0.15)")
    p.add_argument(
        "--closures", help="comma-separated closure kinds (default pinned_labor)"
    )
    p.add_argument("--horizon", type=int, default=100)
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("compare", help="paired-economy comparisons")
    p.add_argument("which", choices=["savings", "productivity"])
    p.add_argument("--s-low", type=float, default=0.15)
    p.add_argument("--s-high", type=float, default=0.25)
    p.add_argument("--factor", type=float, default=1.1)
    p.set_defaults(fn=cmd_compare)

    p = sub.add_parser("laffer", help="revenue-curve diagnostics")
    p.add_argument("--period", type=int, default=0)
    p.add_argument("--capital", type=float, default=500.0)
    p.add_argument("--step", type=float, default=0.25, help="curve sampling step")
    p.add_argument("--out", help="write the sampled curve as CSV")
    p.set_defaults(fn=cmd_laffer)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ConfigError as exc:
        for problem in exc.problems:
            print(f"config error: {problem}", file=sys.stderr)
        return USAGE_ERROR
    except ComparisonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ClosureInfeasibleError, InfeasibleTransferError) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return INFEASIBLE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
