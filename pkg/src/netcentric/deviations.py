"""Published reference grid and the machine-readable deviation ledger.

The bundled scenario reproduces a published sample grid of monthly
housing-plus-transport costs over a range of NCF values. The published
grid is not fully self-consistent: a handful of cells disagree with the
arithmetic its own per-trip costs imply, and three printed per-trip
figures disagree with the cost formula. Those mismatches are frozen
here as data, so that grid comparisons can assert "everything matches
except exactly the known deviations".

Cell values are whole dollars; None marks a cell the published grid
leaves infeasible (printed as N/A).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .econ import (
    CostParams,
    ResidenceOption,
    effective_trip_cost,
    monthly_cost,
    trip_cost,
    whole_dollars,
)

PUBLISHED_NCF_GRID: tuple[Fraction, ...] = (
    Fraction(0),
    Fraction(1, 5),
    Fraction(2, 5),
    Fraction(3, 5),
    Fraction(4, 5),
    Fraction(9, 10),
    Fraction(19, 20),
)


@dataclass(frozen=True)
class PublishedRow:
    label: str
    trip_cost: int  # the printed per-trip column, whole dollars
    cells: tuple[Optional[int], ...]  # aligned with PUBLISHED_NCF_GRID


# The one cell printed only to two significant figures ("12K") is stored
# at the value its own row arithmetic gives, 11,900.
PUBLISHED_GRID: tuple[PublishedRow, ...] = (
    PublishedRow("0mi", 0, (5000, 5000, 5000, 5000, 5000, 5000, 5000)),
    PublishedRow("5mi", 25, (4000, 3900, 3800, 3700, 3600, 3550, 3525)),
    PublishedRow("10mi", 40, (3300, 3140, 2980, 2820, 2660, 2580, 2540)),
    PublishedRow("25mi", 71, (2980, 2636, 2352, 2068, 1784, 1642, 1571)),
    PublishedRow("40mi", 100, (3200, 2800, 2400, 2000, 1600, 1400, 1300)),
    PublishedRow("100mi", 200, (5500, 4620, 3740, 2860, 1980, 1540, 1320)),
    PublishedRow("1000mi", 480, (None, 6980, 5460, 3940, 2420, 1660, 1280)),
    PublishedRow("2500mi", 900, (None, None, 11900, 8300, 4700, 2900, 2000)),
    PublishedRow("2500mi-hotel", 900, (None, None, 5400, 4100, 2900, 2500, 1850)),
    PublishedRow("6000mi", 2340, (None, None, None, 7580, 4440, 2870, 2085)),
)


@dataclass(frozen=True)
class DeviationEntry:
    ref: str  # "cell:<label>@<ncf>" or "trip:<label>"
    published: int
    computed: int
    note: str


def computed_cells(
    options: Sequence[ResidenceOption],
    ncf_grid: Sequence[Fraction],
    params: CostParams,
) -> list[tuple[str, tuple[Optional[int], ...]]]:
    """Recomputed grid, whole dollars, None for infeasible cells."""
    rows = []
    for option in options:
        cells = []
        for ncf in ncf_grid:
            cost = monthly_cost(option, ncf, params)
            cells.append(whole_dollars(cost.total) if cost.feasible else None)
        rows.append((option.label, tuple(cells)))
    return rows


def deviation_ledger(
    options: Sequence[ResidenceOption],
    ncf_grid: Sequence[Fraction],
    params: CostParams,
    published: Sequence[PublishedRow] = PUBLISHED_GRID,
) -> tuple[DeviationEntry, ...]:
    """Every disagreement between the published grid and the recomputation.

    Cell entries compare published monthly totals against the model;
    trip entries compare the printed per-trip figure against the cost
    formula (noting which value the grid cells actually use).
    """
    by_label = {row.label: row for row in published}
    entries: list[DeviationEntry] = []
    for option in options:
        row = by_label.get(option.label)
        if row is None:
            continue
        formula = whole_dollars(trip_cost(option, params))
        effective = whole_dollars(effective_trip_cost(option, params))
        if option.printed_trip_cost is not None:
            printed = round(option.printed_trip_cost)
            if printed != formula:
                entries.append(
                    DeviationEntry(
                        ref=f"trip:{option.label}",
                        published=printed,
                        computed=formula,
                        note=f"grid cells use {effective}",
                    )
                )
        for ncf, published_cell in zip(ncf_grid, row.cells):
            cost = monthly_cost(option, ncf, params)
            computed = whole_dollars(cost.total) if cost.feasible else None
            if published_cell is None or computed is None:
                if published_cell != computed:
                    entries.append(
                        DeviationEntry(
                            ref=f"cell:{option.label}@{_fmt(ncf)}",
                            published=published_cell if published_cell is not None else -1,
                            computed=computed if computed is not None else -1,
                            note="feasibility disagrees with the published grid",
                        )
                    )
            elif published_cell != computed:
                entries.append(
                    DeviationEntry(
                        ref=f"cell:{option.label}@{_fmt(ncf)}",
                        published=published_cell,
                        computed=computed,
                        note="published cell disagrees with its own row arithmetic",
                    )
                )
    return tuple(entries)


def _fmt(ncf: Fraction) -> str:
    return repr(float(ncf))
