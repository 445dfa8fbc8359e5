"""Run configuration: schema, loading, validation, hashing.

Config files are TOML. The schema, with every key this loader accepts:

    label = "baseline-century"      # optional run name
    horizon = 100                   # required, last period of the run
    start_capital = 500.0           # required with [technology];
                                    # defaults to the K target with [calibration]

    [calibration]                   # exactly one of [calibration] / [technology]
    Y = 100.0                       # start output
    K = 500.0                       # start capital
    L = 75.0                        # start employment
    population = 100.0
    alpha = 0.25                    # traditional-capital share
    tax = 0.5                       # start flat tax
    transfer = 0.5                  # start per-person transfer
    labor_quality = 1.0

    [technology]                    # explicit alternative to calibrating
    labor_productivity = 0.78
    automation_productivity = 0.039
    labor_quality = 1.0             # optional

    [params]                        # optional overrides
    s = 0.15                        # saving rate
    theta = 0.02                    # depreciation
    post_labor_tax = 0.5
    abundance_fraction = 0.25
    financing = "flat_tax"          # or "public_capital"
    alpha = 0.25                    # these three only with [technology];
    population = 100.0              # under [calibration] they are derived
    disincentive = 25.0             # from the targets

    [growth]                        # optional, per-period rates, default 0
    labor_productivity = 0.01
    automation_productivity = 0.015
    labor_quality = 0.005

    [closure]                       # required: the one extra per-period rule
    kind = "pinned_labor"           # pinned_labor | pinned_tax |
                                    # pinned_transfer | pinned_output
    level = 75.0                    # constant path; or instead:
    # [closure.path]                # knots, interpolated linearly between
    # 0 = 75.0
    # 100 = 29.0

    [[phases]]                      # optional overrides for period ranges
    start = 3
    end = 10
    s = 0.25                        # optional
    # [phases.growth]  and  [phases.closure]  as above

    [verify]
    tables = ["T1"]                 # golden tables to check the run against

    [output]
    directory = "out"
    csv = true
    charts = false

Validation never stops at the first problem; every diagnostic names the full
key path that caused it. The config hash covers exactly the fields that can
change the computed numbers, so cosmetic edits (label, output flags) leave
it alone.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from .calibration import CalibrationTargets, calibrate
from .closures import PinnedLabor, PinnedOutput, PinnedTax, PinnedTransfer
from .errors import ConfigError
from .params import FLAT_TAX, PUBLIC_CAPITAL, GrowthRates, ModelParams, Technology
from .scenarios import Phase, ScenarioSpec

__all__ = [
    "ClosureConfig",
    "PhaseConfig",
    "RunConfig",
    "load_config",
    "parse_config",
    "config_hash",
    "shipped_config_path",
    "shipped_config_names",
]

_CLOSURE_KINDS = {
    "pinned_labor": PinnedLabor,
    "pinned_tax": PinnedTax,
    "pinned_transfer": PinnedTransfer,
    "pinned_output": PinnedOutput,
}

_GOLDEN_IDS = ("T1", "T2", "T3a", "T3b")


@dataclass(frozen=True)
class ClosureConfig:
    kind: str
    level: float | None = None
    path: tuple[tuple[int, float], ...] = ()

    def build(self):
        cls = _CLOSURE_KINDS[self.kind]
        if self.level is not None:
            return cls(self.level)
        return cls(dict(self.path))


@dataclass(frozen=True)
class PhaseConfig:
    start: int
    end: int
    s: float | None = None
    growth: GrowthRates | None = None
    closure: ClosureConfig | None = None

    def build(self) -> Phase:
        return Phase(
            start=self.start,
            end=self.end,
            s=self.s,
            growth=self.growth,
            closure=None if self.closure is None else self.closure.build(),
        )


@dataclass(frozen=True)
class RunConfig:
    """A fully validated run: resolved parameters plus output plumbing."""

    label: str
    horizon: int
    start_capital: float
    params: ModelParams
    closure: ClosureConfig
    phases: tuple[PhaseConfig, ...]
    targets: CalibrationTargets | None
    verify_tables: tuple[str, ...]
    out_dir: str
    emit_csv: bool
    emit_charts: bool

    def scenario_spec(self) -> ScenarioSpec:
        return ScenarioSpec(
            params=self.params,
            closure=self.closure.build(),
            horizon=self.horizon,
            start_capital=self.start_capital,
            phases=tuple(p.build() for p in self.phases),
            label=self.label,
        )

    def semantic_dict(self) -> dict:
        """The fields that matter for the computed numbers, JSON-ready.

        Resolved values, not raw file text: two files that calibrate to the
        same parameters hash identically, while any change that moves a
        number changes the hash.
        """
        def closure_dict(c: ClosureConfig) -> dict:
            return {"kind": c.kind, "level": c.level, "path": list(c.path)}

        return {
            "horizon": self.horizon,
            "start_capital": self.start_capital,
            "params": {
                "technology": asdict(self.params.base_tech),
                "growth": asdict(self.params.growth),
                "alpha": self.params.alpha,
                "population": self.params.population,
                "disincentive": self.params.disincentive,
                "theta": self.params.theta,
                "s": self.params.s,
                "post_labor_tax": self.params.post_labor_tax,
                "abundance_fraction": self.params.abundance_fraction,
                "financing": self.params.financing,
            },
            "closure": closure_dict(self.closure),
            "phases": [
                {
                    "start": p.start,
                    "end": p.end,
                    "s": p.s,
                    "growth": None if p.growth is None else asdict(p.growth),
                    "closure": None if p.closure is None else closure_dict(p.closure),
                }
                for p in self.phases
            ],
        }


def config_hash(config: RunConfig) -> str:
    canonical = json.dumps(config.semantic_dict(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


class _Reader:
    """Pulls typed values out of the parsed tree, collecting every problem."""

    def __init__(self):
        self.problems: list[str] = []

    def complain(self, path: str, message: str) -> None:
        self.problems.append(f"{path}: {message}")

    def number(self, table: dict, key: str, path: str, default=None):
        if key not in table:
            return default
        value = table[key]
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            self.complain(f"{path}.{key}", f"expected a number, got {value!r}")
            return default
        return float(value)

    def integer(self, table: dict, key: str, path: str, default=None):
        if key not in table:
            return default
        value = table[key]
        if isinstance(value, bool) or not isinstance(value, int):
            self.complain(f"{path}.{key}", f"expected an integer, got {value!r}")
            return default
        return value

    def check_keys(self, table: dict, allowed: set, path: str) -> None:
        for key in table:
            if key not in allowed:
                self.complain(f"{path}.{key}" if path else key, "unknown key")


def _parse_growth(reader: _Reader, table: dict, path: str) -> GrowthRates:
    reader.check_keys(
        table,
        {"labor_productivity", "automation_productivity", "labor_quality"},
        path,
    )
    return GrowthRates(
        labor_productivity=reader.number(table, "labor_productivity", path, 0.0),
        automation_productivity=reader.number(table, "automation_productivity", path, 0.0),
        labor_quality=reader.number(table, "labor_quality", path, 0.0),
    )


def _parse_closure(reader: _Reader, table: dict, path: str) -> ClosureConfig | None:
    reader.check_keys(table, {"kind", "level", "path"}, path)
    kind = table.get("kind")
    if kind not in _CLOSURE_KINDS:
        reader.complain(
            f"{path}.kind",
            f"must be one of {sorted(_CLOSURE_KINDS)}, got {kind!r}",
        )
        return None
    has_level = "level" in table
    has_path = "path" in table
    if has_level == has_path:
        reader.complain(path, "exactly one of 'level' and 'path' is required")
        return None
    if has_level:
        level = reader.number(table, "level", path)
        if level is None:
            return None
        return ClosureConfig(kind=kind, level=level)
    raw = table["path"]
    if not isinstance(raw, dict) or not raw:
        reader.complain(f"{path}.path", "expected a non-empty table of period = value")
        return None
    knots = []
    ok = True
    for key, value in raw.items():
        try:
            period = int(key)
        except ValueError:
            reader.complain(f"{path}.path.{key}", "period keys must be integers")
            ok = False
            continue
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            reader.complain(f"{path}.path.{key}", f"expected a number, got {value!r}")
            ok = False
            continue
        knots.append((period, float(value)))
    if not ok:
        return None
    return ClosureConfig(kind=kind, path=tuple(sorted(knots)))


_PARAM_RANGES = {
    # key -> (validator, requirement description)
    "s": (lambda v: 0.0 < v <= 1.0, "must lie in (0, 1]"),
    "theta": (lambda v: 0.0 <= v <= 1.0, "must lie in [0, 1]"),
    "alpha": (lambda v: 0.0 < v < 1.0, "must lie strictly in (0, 1)"),
    "population": (lambda v: v > 0.0, "must be positive"),
    "disincentive": (lambda v: v > 0.0, "must be positive"),
    "post_labor_tax": (lambda v: 0.5 <= v <= 1.0, "must lie in [0.5, 1]"),
    "abundance_fraction": (lambda v: 0.0 < v <= 1.0, "must lie in (0, 1]"),
}


def parse_config(raw: dict, origin: str = "<config>") -> RunConfig:
    """Validate a parsed TOML tree and resolve it into a RunConfig.

    Raises ConfigError carrying every problem found, each prefixed with the
    dotted path of the offending key.
    """
    reader = _Reader()
    reader.check_keys(
        raw,
        {
            "label",
            "horizon",
            "start_capital",
            "calibration",
            "technology",
            "params",
            "growth",
            "closure",
            "phases",
            "verify",
            "output",
        },
        "",
    )

    label = raw.get("label", "")
    if not isinstance(label, str):
        reader.complain("label", f"expected a string, got {label!r}")
        label = ""

    horizon = reader.integer(raw, "horizon", "", None)
    if "horizon" not in raw:
        reader.complain("horizon", "required")
    elif horizon is not None and horizon < 0:
        reader.complain("horizon", f"must be nonnegative, got {horizon}")

    has_cal = "calibration" in raw
    has_tech = "technology" in raw
    if has_cal == has_tech:
        reader.complain(
            "calibration/technology",
            "exactly one of these sections is required",
        )

    params_table = raw.get("params", {})
    if not isinstance(params_table, dict):
        reader.complain("params", "expected a table")
        params_table = {}
    reader.check_keys(
        params_table,
        set(_PARAM_RANGES) | {"financing"},
        "params",
    )
    param_values = {}
    for key in _PARAM_RANGES:
        value = reader.number(params_table, key, "params")
        if value is None:
            continue
        predicate, requirement = _PARAM_RANGES[key]
        if not predicate(value):
            reader.complain(f"params.{key}", f"{requirement}, got {value:g}")
        else:
            param_values[key] = value
    financing = params_table.get("financing", FLAT_TAX)
    if financing not in (FLAT_TAX, PUBLIC_CAPITAL):
        reader.complain(
            "params.financing",
            f"must be {FLAT_TAX!r} or {PUBLIC_CAPITAL!r}, got {financing!r}",
        )
        financing = FLAT_TAX

    targets = None
    tech = None
    start_capital = reader.number(raw, "start_capital", "")
    if has_cal:
        cal = raw["calibration"]
        if not isinstance(cal, dict):
            reader.complain("calibration", "expected a table")
            cal = {}
        allowed = {"Y", "K", "L", "population", "alpha", "tax", "transfer", "labor_quality"}
        reader.check_keys(cal, allowed, "calibration")
        for key in ("alpha", "population", "disincentive"):
            if key in params_table:
                reader.complain(
                    f"params.{key}",
                    "derived from the calibration targets; remove one of the two",
                )
        kwargs = {}
        for key in allowed:
            value = reader.number(cal, key, "calibration")
            if value is not None:
                kwargs[key] = value
        try:
            targets = CalibrationTargets(**kwargs)
            solved = calibrate(targets)
        except ConfigError as exc:
            for problem in exc.problems:
                reader.complain("calibration", problem)
        else:
            tech = solved.tech
            param_values["alpha"] = targets.alpha
            param_values["population"] = targets.population
            param_values["disincentive"] = solved.disincentive
            if start_capital is None:
                start_capital = targets.K
    if has_tech:
        tt = raw["technology"]
        if not isinstance(tt, dict):
            reader.complain("technology", "expected a table")
            tt = {}
        reader.check_keys(
            tt,
            {"labor_productivity", "automation_productivity", "labor_quality"},
            "technology",
        )
        A = reader.number(tt, "labor_productivity", "technology")
        B = reader.number(tt, "automation_productivity", "technology")
        Q = reader.number(tt, "labor_quality", "technology", 1.0)
        for key, value in (("labor_productivity", A), ("automation_productivity", B)):
            if key not in tt:
                reader.complain(f"technology.{key}", "required")
            elif value is not None and value <= 0:
                reader.complain(f"technology.{key}", f"must be positive, got {value:g}")
        if A and B and A > 0 and B > 0:
            tech = Technology(A, B, Q if Q and Q > 0 else 1.0)
        if start_capital is None:
            reader.complain("start_capital", "required when technology is explicit")

    if start_capital is not None and start_capital <= 0:
        reader.complain("start_capital", f"must be positive, got {start_capital:g}")

    growth = _parse_growth(reader, raw.get("growth", {}), "growth")

    closure = None
    if "closure" not in raw:
        reader.complain("closure", "required")
    elif not isinstance(raw["closure"], dict):
        reader.complain("closure", "expected a table")
    else:
        closure = _parse_closure(reader, raw["closure"], "closure")

    phases: list[PhaseConfig] = []
    raw_phases = raw.get("phases", [])
    if not isinstance(raw_phases, list):
        reader.complain("phases", "expected an array of tables")
        raw_phases = []
    for i, entry in enumerate(raw_phases):
        where = f"phases[{i}]"
        if not isinstance(entry, dict):
            reader.complain(where, "expected a table")
            continue
        reader.check_keys(entry, {"start", "end", "s", "growth", "closure"}, where)
        start = reader.integer(entry, "start", where)
        end = reader.integer(entry, "end", where)
        if start is None or end is None:
            reader.complain(where, "start and end are required")
            continue
        if end < start:
            reader.complain(where, f"end {end} precedes start {start}")
            continue
        phase_s = reader.number(entry, "s", where)
        if phase_s is not None and not 0.0 < phase_s <= 1.0:
            reader.complain(f"{where}.s", f"must lie in (0, 1], got {phase_s:g}")
            phase_s = None
        phase_growth = None
        if "growth" in entry:
            phase_growth = _parse_growth(reader, entry["growth"], f"{where}.growth")
        phase_closure = None
        if "closure" in entry:
            phase_closure = _parse_closure(reader, entry["closure"], f"{where}.closure")
        phases.append(
            PhaseConfig(
                start=start, end=end, s=phase_s, growth=phase_growth, closure=phase_closure
            )
        )
    phases.sort(key=lambda p: p.start)
    for left, right in zip(phases, phases[1:]):
        if right.start <= left.end:
            reader.complain(
                "phases",
                f"[{left.start},{left.end}] and [{right.start},{right.end}] overlap",
            )
    if horizon is not None and phases and phases[-1].end > horizon:
        reader.complain("phases", f"last phase ends beyond horizon {horizon}")

    verify_tables: tuple[str, ...] = ()
    if "verify" in raw:
        vt = raw["verify"]
        if not isinstance(vt, dict):
            reader.complain("verify", "expected a table")
        else:
            reader.check_keys(vt, {"tables"}, "verify")
            tables = vt.get("tables", [])
            if not isinstance(tables, list) or not all(
                isinstance(x, str) for x in tables
            ):
                reader.complain("verify.tables", "expected an array of table ids")
            else:
                for tid in tables:
                    if tid not in _GOLDEN_IDS:
                        reader.complain(
                            "verify.tables", f"unknown table {tid!r}; know {_GOLDEN_IDS}"
                        )
                verify_tables = tuple(tables)

    out_dir, emit_csv, emit_charts = "out", True, False
    if "output" in raw:
        ot = raw["output"]
        if not isinstance(ot, dict):
            reader.complain("output", "expected a table")
        else:
            reader.check_keys(ot, {"directory", "csv", "charts"}, "output")
            directory = ot.get("directory", out_dir)
            if not isinstance(directory, str):
                reader.complain("output.directory", f"expected a string, got {directory!r}")
            else:
                out_dir = directory
            for key, current in (("csv", emit_csv), ("charts", emit_charts)):
                flag = ot.get(key, current)
                if not isinstance(flag, bool):
                    reader.complain(f"output.{key}", f"expected a boolean, got {flag!r}")
                    flag = current
                if key == "csv":
                    emit_csv = flag
                else:
                    emit_charts = flag

    if reader.problems:
        raise ConfigError([f"{origin}: {p}" for p in reader.problems])
    assert tech is not None and closure is not None and horizon is not None

    params = ModelParams(
        base_tech=tech,
        growth=growth,
        financing=financing,
        **param_values,
    )
    return RunConfig(
        label=label,
        horizon=horizon,
        start_capital=start_capital,
        params=params,
        closure=closure,
        phases=tuple(phases),
        targets=targets,
        verify_tables=verify_tables,
        out_dir=out_dir,
        emit_csv=emit_csv,
        emit_charts=emit_charts,
    )


def load_config(path: str | Path) -> RunConfig:
    """Load and validate a TOML config file."""
    p = Path(path)
    if not p.exists():
        raise ConfigError([f"{p}: no such file"])
    try:
        raw = tomllib.loads(p.read_text(encoding="utf-8"))
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError([f"{p}: not parseable as TOML: {exc}"]) from exc
    return parse_config(raw, origin=str(p))


def shipped_config_path(name: str) -> Path:
    """Path of a config file shipped inside the package.

    `name` may omit the .cfg suffix. Raises ConfigError for unknown names,
    listing what is available.
    """
    stem = name[:-4] if name.endswith(".cfg") else name
    folder = Path(__file__).parent / "configs"
    candidate = folder / f"{stem}.cfg"
    if not candidate.exists():
        raise ConfigError(
            [f"no shipped config {name!r}; available: {shipped_config_names()}"]
        )
    return candidate


def shipped_config_names() -> list[str]:
    folder = Path(__file__).parent / "configs"
    return sorted(p.stem for p in folder.glob("*.cfg"))
