"""CSV and SVG emission for scenario results.

The cost grid CSV mirrors the layout of the published sample table: one
row per residence, a column per NCF value, infeasible cells printed as
N/A, dollars as plain integers. The curve emitter draws self-contained
SVG 1.1 (inline styling, fixed 800x600 viewport, no plotting library);
identical inputs produce identical bytes.
"""

from __future__ import annotations

import csv
import io
import math
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from .econ import (
    CommuteMode,
    ResidenceOption,
    effective_trip_cost,
    gain_in_place,
    monthly_cost,
    whole_dollars,
)
from .scenario import Scenario

MODE_LABELS = {
    CommuteMode.WALK: "Walk",
    CommuteMode.TRAM_BUS: "Tram/Bus",
    CommuteMode.CAR: "Car",
    CommuteMode.TRAIN_AIR: "Train/Air",
    CommuteMode.SHORT_HAUL_AIR: "Air",
    CommuteMode.MID_HAUL_AIR: "Air",
    CommuteMode.LONG_HAUL_AIR: "Air",
}


def mode_label(option: ResidenceOption) -> str:
    label = MODE_LABELS[option.mode]
    return f"{label} + hotel" if option.hotel else label


def _num(value: float) -> str:
    """Shortest exact decimal: integers without a trailing .0."""
    if float(value).is_integer():
        return str(int(value))
    return repr(float(value))


def format_ncf(ncf) -> str:
    return _num(float(ncf)) if float(ncf) in (0.0, 1.0) else repr(float(ncf))


def emit_cost_grid(scenario: Scenario) -> str:
    """Cost grid CSV: residences in file order, one column per NCF value."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    header = ["distance", "time", "housing", "mode", "trip_cost"]
    header.extend(f"NCF={format_ncf(ncf)}" for ncf in scenario.ncf_grid)
    writer.writerow(header)
    for option in scenario.residences:
        row = [
            _num(option.distance),
            _num(option.one_way_time),
            str(whole_dollars(round(option.housing * 100))),
            mode_label(option),
            str(whole_dollars(effective_trip_cost(option, scenario.params))),
        ]
        for ncf in scenario.ncf_grid:
            cost = monthly_cost(option, ncf, scenario.params)
            row.append(str(whole_dollars(cost.total)) if cost.feasible else "N/A")
        writer.writerow(row)
    return buffer.getvalue()


class CurveKind(Enum):
    COST_VS_DISTANCE = "cost"
    GAIN_VS_DISTANCE = "gain"


_PALETTE = (
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#d62728",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
    "#bcbd22",
    "#17becf",
)

_WIDTH, _HEIGHT = 800, 600
_LEFT, _RIGHT, _TOP, _BOTTOM = 80, 160, 50, 60


def _series_points(
    scenario: Scenario, kind: CurveKind
) -> list[tuple[Fraction, list[tuple[float, int]]]]:
    options = sorted(scenario.residences, key=lambda o: o.distance)
    series = []
    for ncf in scenario.ncf_grid:
        points = []
        for option in options:
            if kind is CurveKind.COST_VS_DISTANCE:
                cost = monthly_cost(option, ncf, scenario.params)
                if not cost.feasible:
                    continue
                points.append((option.distance, whole_dollars(cost.total)))
            else:
                point = gain_in_place(option, ncf, scenario.params)
                if point.flagged and point.gain == 0:
                    continue  # not liveable at this NCF
                points.append((option.distance, whole_dollars(point.gain)))
        series.append((ncf, points))
    return series


def emit_curves(scenario: Scenario, kind: CurveKind) -> str:
    """SVG with one polyline per NCF value over a log-scaled distance axis."""
    if len(scenario.residences) < 2:
        raise ValueError("curve emission needs at least 2 residences")
    series = _series_points(scenario, kind)
    for ncf, points in series:
        if len(points) < 2:
            raise ValueError(
                f"series NCF={format_ncf(ncf)} has fewer than 2 points"
            )

    # Distance axis is log10(distance + 1) so a zero-distance row plots.
    def xval(distance: float) -> float:
        return math.log10(distance + 1)

    xs = [xval(o.distance) for o in scenario.residences]
    x_lo, x_hi = min(xs), max(xs)
    if x_hi == x_lo:
        x_hi = x_lo + 1
    y_hi = max(value for _, points in series for _, value in points)
    y_hi = max(y_hi, 1)

    plot_w = _WIDTH - _LEFT - _RIGHT
    plot_h = _HEIGHT - _TOP - _BOTTOM

    def px(distance: float) -> float:
        return _LEFT + (xval(distance) - x_lo) / (x_hi - x_lo) * plot_w

    def py(value: float) -> float:
        return _TOP + plot_h - value / (y_hi * 1.05) * plot_h

    title = (
        "Monthly cost of housing plus transport"
        if kind is CurveKind.COST_VS_DISTANCE
        else "Monthly gain from telecommuting"
    )
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_WIDTH}" height="{_HEIGHT}" viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        "<style>text{font-family:sans-serif;font-size:12px;}"
        ".title{font-size:16px;}</style>",
        f'<rect x="0" y="0" width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
        f'<text class="title" x="{_WIDTH / 2:.2f}" y="28" '
        f'text-anchor="middle">{title}</text>',
        # Axes.
        f'<line x1="{_LEFT}" y1="{_TOP + plot_h}" x2="{_LEFT + plot_w}" '
        f'y2="{_TOP + plot_h}" stroke="black"/>',
        f'<line x1="{_LEFT}" y1="{_TOP}" x2="{_LEFT}" y2="{_TOP + plot_h}" '
        'stroke="black"/>',
        f'<text x="{_LEFT + plot_w / 2:.2f}" y="{_HEIGHT - 14}" '
        'text-anchor="middle">distance to work (miles, log scale)</text>',
        f'<text x="20" y="{_TOP + plot_h / 2:.2f}" text-anchor="middle" '
        f'transform="rotate(-90 20 {_TOP + plot_h / 2:.2f})">USD per month</text>',
    ]

    # Distance ticks at each distinct residence distance.
    seen = set()
    for option in sorted(scenario.residences, key=lambda o: o.distance):
        if option.distance in seen:
            continue
        seen.add(option.distance)
        x = px(option.distance)
        out.append(
            f'<line x1="{x:.2f}" y1="{_TOP + plot_h}" x2="{x:.2f}" '
            f'y2="{_TOP + plot_h + 5}" stroke="black"/>'
        )
        out.append(
            f'<text x="{x:.2f}" y="{_TOP + plot_h + 18}" '
            f'text-anchor="middle">{_num(option.distance)}</text>'
        )
    # Five evenly spaced dollar ticks.
    for i in range(6):
        value = y_hi * 1.05 * i / 5
        y = py(value)
        out.append(
            f'<line x1="{_LEFT - 5}" y1="{y:.2f}" x2="{_LEFT}" y2="{y:.2f}" '
            'stroke="black"/>'
        )
        out.append(
            f'<text x="{_LEFT - 8}" y="{y + 4:.2f}" '
            f'text-anchor="end">{round(value)}</text>'
        )

    for index, (ncf, points) in enumerate(series):
        color = _PALETTE[index % len(_PALETTE)]
        coords = " ".join(f"{px(d):.2f},{py(v):.2f}" for d, v in points)
        out.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="2" '
            f'points="{coords}"/>'
        )
        legend_y = _TOP + 10 + index * 18
        legend_x = _WIDTH - _RIGHT + 16
        out.append(
            f'<line x1="{legend_x}" y1="{legend_y}" x2="{legend_x + 22}" '
            f'y2="{legend_y}" stroke="{color}" stroke-width="2"/>'
        )
        out.append(
            f'<text x="{legend_x + 28}" y="{legend_y + 4}">'
            f"NCF={format_ncf(ncf)}</text>"
        )

    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_optimization(scenario: Scenario) -> str:
    """Best residence per NCF value as CSV."""
    from .econ import optimize_settlement

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["ncf", "label", "distance", "total"])
    for ncf in scenario.ncf_grid:
        best = optimize_settlement(scenario.residences, ncf, scenario.params)
        if best is None:
            writer.writerow([format_ncf(ncf), "none", "", ""])
        else:
            option, cost = best
            writer.writerow(
                [
                    format_ncf(ncf),
                    option.label,
                    _num(option.distance),
                    str(whole_dollars(cost.total)),
                ]
            )
    return buffer.getvalue()
