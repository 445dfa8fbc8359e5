"""Golden reference tables.

Four published reference tables, stored exactly as printed (decimal commas
included) together with each column's printed precision. A printed cell is a
rounded value, so the matching contract everywhere is one unit in the last
printed place; the parser side normalizes commas and rescales the percent
column into rate units.

The tables' own arithmetic is only printed-precision consistent (capital
split entries that disagree with the total by one unit occur in several
rows), which is worth remembering before tightening any tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "Column",
    "GoldenTable",
    "BASELINE",
    "POLICY_FREEZE",
    "ROAD_SLOW",
    "ROAD_FAST",
    "TABLES",
]


@dataclass(frozen=True)
class Column:
    """One printed column: snapshot field name, printed decimals, unit."""

    name: str
    decimals: int
    percent: bool = False


@dataclass(frozen=True)
class GoldenTable:
    table_id: str
    title: str
    columns: tuple[Column, ...]
    printed: dict[int, tuple[str, ...]]

    def periods(self) -> list[int]:
        return sorted(self.printed)

    def column(self, name: str) -> Column:
        for col in self.columns:
            if col.name == name:
                return col
        raise KeyError(f"{self.table_id} has no column {name!r}")

    def cell(self, T: int, name: str) -> str:
        return self.printed[T][[c.name for c in self.columns].index(name)]

    def value(self, T: int, name: str) -> float:
        """Parsed numeric value of a cell, in model units (rates, not percent)."""
        raw = float(self.cell(T, name).replace(",", "."))
        return raw / 100.0 if self.column(name).percent else raw

    def tolerance(self, name: str) -> float:
        """One unit in the last printed place, in model units."""
        col = self.column(name)
        unit = 10.0 ** (-col.decimals)
        return unit / 100.0 if col.percent else unit

    def labor_path(self) -> dict[int, float]:
        return {T: self.value(T, "L") for T in self.periods()}


_MAIN_COLUMNS = (
    Column("Y", 0),
    Column("K1", 0),
    Column("K2", 0),
    Column("K", 0),
    Column("L", 0),
    Column("r", 2, percent=True),
    Column("w", 2),
    Column("G", 2),
    Column("t", 2),
)

BASELINE = GoldenTable(
    table_id="T1",
    title="century baseline",
    columns=_MAIN_COLUMNS + (Column("G_public", 2), Column("t_wage", 2)),
    printed={
        0: ("100", "500", "0", "500", "75", "5,00", "1,00", "0,50", "0,50", "0,57", "0,43"),
        10: ("108", "485", "66", "551", "73", "5,59", "1,06", "0,57", "0,53", "0,66", "0,45"),
        20: ("118", "473", "132", "605", "71", "6,25", "1,13", "0,65", "0,55", "0,76", "0,48"),
        30: ("130", "463", "200", "664", "69", "6,99", "1,21", "0,74", "0,57", "0,88", "0,50"),
        40: ("142", "456", "272", "728", "67", "7,82", "1,28", "0,85", "0,59", "1,01", "0,52"),
        50: ("157", "449", "350", "799", "64", "8,74", "1,37", "0,97", "0,62", "1,17", "0,54"),
        60: ("174", "444", "435", "879", "60", "9,77", "1,45", "1,11", "0,64", "1,35", "0,56"),
        70: ("193", "441", "528", "968", "56", "10,93", "1,55", "1,28", "0,67", "1,57", "0,59"),
        80: ("214", "438", "631", "1069", "51", "12,22", "1,65", "1,48", "0,69", "1,83", "0,62"),
        90: ("239", "437", "746", "1183", "44", "13,66", "1,75", "1,72", "0,72", "2,12", "0,65"),
        100: ("267", "437", "874", "1312", "36", "15,27", "1,86", "1,99", "0,75", "2,46", "0,69"),
    },
)

POLICY_FREEZE = GoldenTable(
    table_id="T2",
    title="policy freeze",
    columns=_MAIN_COLUMNS,
    printed={
        0: ("100", "500", "0", "500", "75", "5,00", "1,00", "0,50", "0,50"),
        5: ("104", "507", "18", "525", "75", "5,13", "1,03", "0,52", "0,50"),
        10: ("108", "515", "36", "551", "75", "5,27", "1,05", "0,54", "0,50"),
    },
)

ROAD_SLOW = GoldenTable(
    table_id="T3a",
    title="slow adoption road",
    columns=_MAIN_COLUMNS,
    printed={
        20: ("118", "452", "333", "786", "51", "6,53", "1,31", "0,83", "0,70"),
        30: ("130", "434", "491", "924", "41", "7,47", "1,49", "0,99", "0,76"),
        40: ("142", "417", "648", "1065", "30", "8,54", "1,71", "1,14", "0,80"),
        50: ("157", "402", "809", "1211", "20", "9,76", "1,95", "1,31", "0,84"),
        51: ("159", "401", "825", "1226", "19", "9,89", "1,98", "1,33", "0,84"),
        60: ("174", "389", "977", "1366", "10", "11,16", "2,23", "1,50", "0,86"),
        68: ("189", "380", "1119", "1498", "1", "12,42", "2,48", "1,66", "0,88"),
    },
)

ROAD_FAST = GoldenTable(
    table_id="T3b",
    title="fast adoption road",
    columns=_MAIN_COLUMNS,
    printed={
        20: ("118", "408", "378", "786", "60", "7,24", "1,02", "0,71", "0,60"),
        30: ("130", "372", "553", "924", "48", "8,71", "1,02", "0,85", "0,66"),
        40: ("142", "340", "725", "1065", "30", "10,49", "1,03", "1,02", "0,71"),
        50: ("157", "311", "900", "1211", "4", "12,62", "1,04", "1,20", "0,77"),
        51: ("159", "308", "918", "1226", "1", "12,86", "1,04", "1,22", "0,77"),
    },
)

TABLES = {t.table_id: t for t in (BASELINE, POLICY_FREEZE, ROAD_SLOW, ROAD_FAST)}
