"""CSV / JSON writers for grid maps and sweep summaries."""

from __future__ import annotations

import csv
import json
from typing import IO, Sequence

from .sweep import GridMap, SweepSummary
from .units import seconds_to_years, watts_to_dbm

GRID_COLUMNS = ("d_m", "theta_rad", "rho_dbm", "outage", "ebl_years", "best_config")
SUMMARY_COLUMNS = ("N", "C", "avg_rho_dbm", "avg_ebl_years", "outage_area_pct")


def _fmt(x) -> str:
    return "" if x is None else f"{x:.9g}"


def grid_rows(gmap: GridMap):
    d = gmap.grid.d_centers
    theta = gmap.grid.theta_centers
    for (i, j), cell in gmap.cells():
        if cell.outage:
            yield (_fmt(d[i]), _fmt(theta[j]), "", "1", "", "")
        else:
            yield (
                _fmt(d[i]),
                _fmt(theta[j]),
                _fmt(watts_to_dbm(cell.rho)),
                "0",
                _fmt(seconds_to_years(cell.ebl)),
                str(cell.best_angle_index + 1),
            )


def emit_grid_csv(gmap: GridMap, sink: IO[str]) -> int:
    """Write one row per cell (distance-major); returns the number of data rows."""
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(GRID_COLUMNS)
    n = 0
    for row in grid_rows(gmap):
        writer.writerow(row)
        n += 1
    return n


def summary_record(s: SweepSummary) -> dict:
    return {
        "N": s.n_total,
        "C": s.c_count,
        "avg_rho_dbm": None if s.avg_rho is None else watts_to_dbm(s.avg_rho),
        "avg_ebl_years": None if s.avg_ebl is None else seconds_to_years(s.avg_ebl),
        "outage_area_pct": s.outage_area_pct,
    }


def emit_summary(summaries: Sequence[SweepSummary], sink: IO[str], format: str = "csv") -> int:
    """Write sweep summaries ordered by ``(C, N)`` as CSV or JSON."""
    if not summaries:
        raise ValueError("no summaries to write")
    records = [summary_record(s) for s in sorted(summaries, key=lambda s: (s.c_count, s.n_total))]
    if format == "csv":
        writer = csv.writer(sink, lineterminator="\n")
        writer.writerow(SUMMARY_COLUMNS)
        for r in records:
            writer.writerow(
                [str(r["N"]), str(r["C"])] + [_fmt(r[k]) for k in SUMMARY_COLUMNS[2:]]
            )
    elif format == "json":
        json.dump(records, sink, indent=2)
        sink.write("\n")
    else:
        raise ValueError(f"unknown summary format {format!r}")
    return len(records)
