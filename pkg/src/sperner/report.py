"""Table and figure rows, and their CSV rendering."""

from __future__ import annotations

import csv
import io
from dataclasses import astuple, dataclass

from .bounds import Params, aggregate, mms_floor, nlb

TABLE_HEADER = ["n", "k", "lower", "lower_source", "upper", "upper_gap_vs_mms_floor", "nlb", "mms_floor"]
FIGURE_HEADER = ["n", "nlb", "best_lower", "best_upper", "mms_floor"]


@dataclass(frozen=True)
class TableRow:
    n: int
    k: int
    lower: int
    lower_source: str
    upper: int
    upper_gap_vs_mms_floor: int
    nlb: int
    mms_floor: int


@dataclass(frozen=True)
class FigureRow:
    n: int
    nlb: int
    best_lower: int
    best_upper: int
    mms_floor: int


def table_rows(k_min: int = 4, k_max: int = 7, n_max: int = 33) -> list[TableRow]:
    """One row per ``(n, k)`` with ``2k+2 <= n <= n_max``, sorted by ``(k, n)``."""
    if k_min < 1 or k_max < k_min:
        raise ValueError(f"bad k range {k_min}..{k_max}")
    rows = []
    for k in range(k_min, k_max + 1):
        if n_max < 2 * k + 2:
            continue
        cells = aggregate(k, n_max)
        for n in range(2 * k + 2, n_max + 1):
            cell, params = cells[n], Params(n, k)
            floor_mms = mms_floor(params)
            rows.append(TableRow(n, k, cell.lower.value, cell.lower.source, cell.upper.value,
                                 floor_mms - cell.upper.value, nlb(params), floor_mms))
    return rows


def figure_rows(k: int, n_max: int) -> list[FigureRow]:
    if k < 2:
        raise ValueError("figure data needs k >= 2")
    if n_max < 2 * k + 2:
        raise ValueError(f"n_max must be at least 2k+2 = {2 * k + 2}")
    cells = aggregate(k, n_max)
    rows = []
    for n in range(2 * k + 2, n_max + 1):
        params = Params(n, k)
        rows.append(FigureRow(n, nlb(params), cells[n].lower.value, cells[n].upper.value,
                              mms_floor(params)))
    return rows


def to_csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(astuple(row))
    return buf.getvalue()
