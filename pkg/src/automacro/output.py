"""File emission: trajectory CSV, JSON manifest, SVG charts.

Everything written here is a pure function of the run, so writing the same
run twice produces byte-identical files. No timestamps, no environment
details beyond declared versions, keys always sorted, floats always in
shortest round-trip form.

The CSV column block is fixed: period, output, the capital split, total
capital, labor, both prices, then the transfer and tax of each financing
regime. Derived convenience columns follow. Empty cells mean the value is
undefined there (the second regime can be infeasible), not zero.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .criteria import CriteriaReport
from .scenarios import Trajectory
from .verify import VerificationReport

__all__ = [
    "CSV_COLUMNS",
    "trajectory_rows",
    "write_csv",
    "read_csv",
    "manifest_dict",
    "write_chart",
    "emit_outputs",
    "criteria_dict",
    "verification_dict",
]

# The leading twelve are a fixed external interface; keep order and names.
CSV_COLUMNS = (
    "T", "Y", "K1", "K2", "K", "L", "r", "w", "G_cap", "t", "G_ms", "t_w",
    "capital_share", "net_return", "regime",
)


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


def trajectory_rows(trajectory: Trajectory) -> list[list]:
    rows = []
    for snap in trajectory:
        rows.append([
            snap.T, snap.Y, snap.K1, snap.K2, snap.K, snap.L, snap.r, snap.w,
            snap.G, snap.t, snap.G_public, snap.t_wage,
            snap.capital_share, snap.net_return, snap.regime,
        ])
    return rows


def write_csv(trajectory: Trajectory, path: Path) -> Path:
    text = io.StringIO()
    writer = csv.writer(text, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in trajectory_rows(trajectory):
        writer.writerow([_cell(v) for v in row])
    path.write_text(text.getvalue(), encoding="utf-8")
    return path


def read_csv(path: Path) -> tuple[tuple[str, ...], list[list]]:
    """Parse a trajectory CSV back into typed rows.

    Writing the parsed rows again must reproduce the file byte for byte;
    the round-trip test holds this function to that.
    """
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        header = tuple(next(reader))
        rows = []
        for raw in reader:
            row = []
            for name, cell in zip(header, raw):
                if cell == "":
                    row.append(None)
                elif name == "T":
                    row.append(int(cell))
                elif name == "regime":
                    row.append(cell)
                else:
                    row.append(float(cell))
            rows.append(row)
    return header, rows


def rows_as_csv_text(header, rows) -> str:
    text = io.StringIO()
    writer = csv.writer(text, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return text.getvalue()


def criteria_dict(report: CriteriaReport) -> dict:
    return {
        "window": list(report.window),
        "verdicts": report.verdicts,
        "per_period": {
            name: {str(T): flag for T, flag in flags.items()}
            for name, flags in report.per_period.items()
        },
        "abundance_onset": report.abundance_onset,
        "post_labor_onset": report.post_labor_onset,
        "landmarks": {str(T): L for T, L in report.landmarks.items()},
    }


def verification_dict(report: VerificationReport) -> dict:
    return {
        "table_id": report.table_id,
        "ok": report.ok,
        "checked": len(report.checks),
        "mismatches": [
            {
                "T": c.T,
                "column": c.column,
                "printed": c.printed,
                "expected": c.expected,
                "actual": c.actual,
                "tolerance": c.tolerance,
            }
            for c in report.mismatches
        ],
    }


def manifest_dict(
    trajectory: Trajectory,
    config_hash: str | None = None,
    reports: dict | None = None,
) -> dict:
    from . import __version__

    series = {}
    for name in ("Y", "K", "K1", "K2", "L", "r", "w", "G", "t"):
        series[name] = trajectory.series(name)
    series["G_public"] = trajectory.series("G_public")
    series["t_wage"] = trajectory.series("t_wage")
    series["regime"] = trajectory.series("regime")
    manifest = {
        "label": trajectory.label,
        "closure": trajectory.closure_name,
        "start": trajectory.start,
        "horizon": trajectory.horizon,
        "periods": len(trajectory),
        "series": series,
        "versions": {"automacro": __version__},
    }
    if config_hash is not None:
        manifest["config_hash"] = config_hash
    if reports:
        manifest["reports"] = reports
    return manifest


def _polyline(xs, ys, x0, y0, width, height) -> str:
    lo, hi = min(ys), max(ys)
    span = hi - lo if hi > lo else 1.0
    xspan = xs[-1] - xs[0] if xs[-1] > xs[0] else 1
    points = []
    for x, y in zip(xs, ys):
        px = x0 + (x - xs[0]) / xspan * width
        py = y0 + height - (y - lo) / span * height
        points.append(f"{px:.2f},{py:.2f}")
    return " ".join(points)


def write_chart(trajectory: Trajectory, path: Path) -> Path:
    """Four stacked panels: labor, transfer, tax rate, capital share."""
    panels = [
        ("labor", trajectory.series("L")),
        ("transfer per person", trajectory.series("G")),
        ("flat tax rate", trajectory.series("t")),
        ("capital share", [s.capital_share for s in trajectory]),
    ]
    xs = [s.T for s in trajectory]
    width, panel_h, pad = 640, 150, 40
    total_h = (panel_h + pad) * len(panels) + pad
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width + 2 * pad}" '
        f'height="{total_h}" font-family="sans-serif" font-size="12">'
    ]
    y0 = pad
    for title, ys in panels:
        lo, hi = min(ys), max(ys)
        parts.append(f'<text x="{pad}" y="{y0 - 8}">{title} '
                     f'(min {lo:.4g}, max {hi:.4g})</text>')
        parts.append(
            f'<rect x="{pad}" y="{y0}" width="{width}" height="{panel_h}" '
            'fill="none" stroke="#999"/>'
        )
        line = _polyline(xs, ys, pad, y0, width, panel_h)
        parts.append(
            f'<polyline points="{line}" fill="none" stroke="#246" stroke-width="1.5"/>'
        )
        y0 += panel_h + pad
    parts.append("</svg>")
    path.write_text("\n".join(parts) + "\n", encoding="utf-8")
    return path


def emit_outputs(
    trajectory: Trajectory,
    out_dir: str | Path,
    emit_csv: bool = True,
    emit_charts: bool = False,
    config_hash: str | None = None,
    reports: dict | None = None,
) -> list[Path]:
    """Write the selected artifacts. The manifest is always written, so a
    run with all flags off still leaves a machine-readable record.

    Returns the paths written. Fails with the underlying OSError (path
    included) if the directory cannot be created or written.
    """
    folder = Path(out_dir)
    folder.mkdir(parents=True, exist_ok=True)
    written = []
    if emit_csv:
        written.append(write_csv(trajectory, folder / "trajectory.csv"))
    manifest = manifest_dict(trajectory, config_hash=config_hash, reports=reports)
    manifest_path = folder / "manifest.json"
    manifest_path.write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    written.append(manifest_path)
    if emit_charts:
        written.append(write_chart(trajectory, folder / "charts.svg"))
    return written
