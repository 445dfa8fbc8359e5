"""Emission layer: CSV round trips, manifests, charts, byte determinism."""

import json

from automacro import ModelParams, Snapshot, Technology, reproduction_spec, run_scenario
from automacro.output import (
    CSV_COLUMNS,
    emit_outputs,
    manifest_dict,
    read_csv,
    rows_as_csv_text,
    trajectory_rows,
    write_csv,
)
from automacro.scenarios import Trajectory


def test_column_block_is_the_fixed_interface():
    assert CSV_COLUMNS[:12] == (
        "T", "Y", "K1", "K2", "K", "L", "r", "w", "G_cap", "t", "G_ms", "t_w",
    )


def test_csv_round_trip_is_byte_identical(freeze_generating_run, tmp_path):
    path = write_csv(freeze_generating_run, tmp_path / "run.csv")
    original = path.read_text(encoding="utf-8")
    header, rows = read_csv(path)
    assert header == CSV_COLUMNS
    assert rows_as_csv_text(header, rows) == original


def test_rerun_emits_identical_bytes(tmp_path):
    spec = reproduction_spec("T2")
    a = write_csv(run_scenario(spec), tmp_path / "a.csv").read_text()
    b = write_csv(run_scenario(spec), tmp_path / "b.csv").read_text()
    assert a == b


def test_undefined_cells_are_empty_not_zero():
    tech = Technology(0.78, 0.039)
    params = ModelParams(base_tech=tech)
    snap = Snapshot(
        T=0, Y=100.0, K=500.0, K1=500.0, K2=0.0, L=75.0, r=0.05, w=1.0,
        G=0.5, t=0.5, G_public=None, t_wage=None, tech=tech, regime="corner",
    )
    run = Trajectory(snapshots=[snap], params=params, closure_name="pinned_labor")
    text = rows_as_csv_text(CSV_COLUMNS, trajectory_rows(run))
    line = text.splitlines()[1]
    cells = line.split(",")
    assert cells[10] == "" and cells[11] == ""  # G_ms, t_w
    header, rows = read_csv_from_text(text)
    assert rows[0][10] is None and rows[0][11] is None


def read_csv_from_text(text):
    import csv, io

    reader = csv.reader(io.StringIO(text))
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


def test_manifest_always_written(stationary_run, tmp_path):
    written = emit_outputs(stationary_run, tmp_path / "bare", emit_csv=False)
    names = [p.name for p in written]
    assert names == ["manifest.json"]
    manifest = json.loads((tmp_path / "bare" / "manifest.json").read_text())
    assert manifest["closure"] == "pinned_labor"
    assert manifest["periods"] == 11
    assert len(manifest["series"]["Y"]) == 11
    assert "config_hash" not in manifest


def test_manifest_with_hash_and_reports(stationary_run, tmp_path):
    written = emit_outputs(
        stationary_run, tmp_path / "full", emit_csv=True, emit_charts=True,
        config_hash="deadbeef", reports={"note": True},
    )
    names = sorted(p.name for p in written)
    assert names == ["charts.svg", "manifest.json", "trajectory.csv"]
    manifest = json.loads((tmp_path / "full" / "manifest.json").read_text())
    assert manifest["config_hash"] == "deadbeef"
    assert manifest["reports"] == {"note": True}


def test_manifest_bytes_are_deterministic(stationary_run, tmp_path):
    emit_outputs(stationary_run, tmp_path / "x")
    emit_outputs(stationary_run, tmp_path / "y")
    assert (tmp_path / "x" / "manifest.json").read_bytes() == (
        tmp_path / "y" / "manifest.json"
    ).read_bytes()


def test_chart_is_self_contained_svg(baseline_run, tmp_path):
    written = emit_outputs(
        baseline_run, tmp_path / "c", emit_csv=False, emit_charts=True
    )
    svg = next(p for p in written if p.suffix == ".svg").read_text()
    assert svg.startswith("<svg")
    assert svg.count("<polyline") == 4
    assert "labor" in svg and "capital share" in svg


def test_manifest_dict_series_cover_both_regimes(baseline_run):
    manifest = manifest_dict(baseline_run)
    assert set(manifest["series"]) >= {
        "Y", "K", "K1", "K2", "L", "r", "w", "G", "t", "G_public", "t_wage", "regime",
    }
    assert manifest["series"]["regime"][0] == "corner"
