"""Economics of network-centric remote work.

Models the trade-off between where a worker lives and how much of the job
can be done online. The net-centric factor (NCF) is the fraction of tasks
performable over the network; it sets the required commute frequency,
which combines with housing prices and per-trip costs into a monthly
cost of housing plus transport. On top of that sit the derived
quantities: the saving unlocked by a given NCF, the telecom budget that
saving can absorb, the cost-minimizing settlement choice, and a carbon
comparison between daily driving and occasional jet commutes.

Money is integer cents everywhere inside this module; helpers convert at
the edges and reports round to whole dollars. NCF values may be floats
or exact ``Fraction``s -- fractions keep grid arithmetic exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence, Union

Cents = int
NcfLike = Union[float, Fraction]

# Calibrated so that 15,000 car-miles/year equals about 50 jet hours.
CAR_KG_PER_MILE = 0.4
JET_KG_PER_PAX_HOUR = 120.0


def usd(amount: Union[int, float, Fraction]) -> Cents:
    """Convert a dollar amount to integer cents."""
    return round(amount * 100)


def dollars(cents: Cents) -> float:
    return cents / 100.0


def whole_dollars(cents: Cents) -> int:
    """Round cents to whole dollars (report granularity)."""
    return round(cents / 100)


class CommuteMode(Enum):
    WALK = "walk"
    TRAM_BUS = "tram_bus"
    CAR = "car"
    TRAIN_AIR = "train_air"
    SHORT_HAUL_AIR = "short_haul_air"
    MID_HAUL_AIR = "mid_haul_air"
    LONG_HAUL_AIR = "long_haul_air"


# Modes that can plausibly pair with hotel stays at the work site.
AIR_MODES = frozenset(
    {
        CommuteMode.TRAIN_AIR,
        CommuteMode.SHORT_HAUL_AIR,
        CommuteMode.MID_HAUL_AIR,
        CommuteMode.LONG_HAUL_AIR,
    }
)


@dataclass(frozen=True)
class CostParams:
    """Rate constants for trip and monthly cost computation.

    time_value: value of travel time, USD per minute.
    car_rate: driving cost, USD per mile.
    air_short/mid/long: flat roundtrip air fares, USD.
    transit_fare: flat tram/bus roundtrip, USD, time loss included.
    hotel_rate: USD per night at the work site.
    working_days: working days per month.
    hotel_batch: commute days bundled into one trip when staying in hotels.
    """

    time_value: float = 0.5
    car_rate: float = 0.5
    air_short: float = 200.0
    air_mid: float = 600.0
    air_long: float = 1500.0
    transit_fare: float = 25.0
    hotel_rate: float = 200.0
    working_days: int = 20
    hotel_batch: float = 4.0

    def __post_init__(self) -> None:
        for name in (
            "time_value",
            "car_rate",
            "air_short",
            "air_mid",
            "air_long",
            "transit_fare",
            "hotel_rate",
            "hotel_batch",
        ):
            if getattr(self, name) <= 0:
                raise ValueError(f"CostParams.{name} must be > 0")
        if not (isinstance(self.working_days, int) and 1 <= self.working_days <= 31):
            raise ValueError("CostParams.working_days must be an integer in [1, 31]")


@dataclass(frozen=True)
class ResidenceOption:
    """One candidate residence: distance, time, price, and commute mode.

    min_ncf, when set, is the smallest NCF at which this option is
    considered liveable at all (below it the monthly cost is flagged
    infeasible rather than computed into a verdict).

    trip_cost_override replaces the formula trip cost in monthly totals;
    printed_trip_cost carries a published figure that differs from the
    value actually used, for deviation reporting only.
    """

    label: str
    distance: float
    one_way_time: float
    housing: float
    mode: CommuteMode
    hotel: bool = False
    min_ncf: Optional[NcfLike] = None
    trip_cost_override: Optional[float] = None
    printed_trip_cost: Optional[float] = None

    def __post_init__(self) -> None:
        if self.distance < 0:
            raise ValueError(f"{self.label}: distance must be >= 0")
        if self.one_way_time < 0:
            raise ValueError(f"{self.label}: one_way_time must be >= 0")
        if self.housing <= 0:
            raise ValueError(f"{self.label}: housing must be > 0")
        if self.hotel and self.mode not in AIR_MODES:
            raise ValueError(f"{self.label}: hotel stays require an air/rail mode")
        if self.min_ncf is not None and not 0 <= self.min_ncf <= 1:
            raise ValueError(f"{self.label}: min_ncf must be in [0, 1]")


@dataclass(frozen=True)
class MonthlyCost:
    """Monthly cost of housing plus transport, in cents.

    feasible is False when the option's min_ncf floor is not met; the
    component arithmetic is still carried for inspection.
    """

    housing: Cents
    commute: Cents
    hotel: Cents
    feasible: bool

    @property
    def total(self) -> Cents:
        return self.housing + self.commute + self.hotel


@dataclass(frozen=True)
class GainPoint:
    """Monthly saving from telecommuting at a given NCF, in cents.

    baseline_ncf is 0 unless the option is not liveable at NCF 0, in
    which case the gain is measured against its min_ncf and flagged.
    """

    option: ResidenceOption
    ncf: NcfLike
    gain: Cents
    baseline_ncf: NcfLike
    flagged: bool


def compute_ncf(online_tasks: int, offline_tasks: int) -> Fraction:
    """Fraction of tasks performable online; exact rational result."""
    if online_tasks < 0 or offline_tasks < 0:
        raise ValueError("task counts must be nonnegative")
    total = online_tasks + offline_tasks
    if total == 0:
        raise ValueError("NCF undefined: no tasks at all")
    return Fraction(online_tasks, total)


def commute_days(ncf: NcfLike, params: CostParams) -> NcfLike:
    """Commute days per month implied by an NCF; fractional days allowed."""
    if not 0 <= ncf <= 1:
        raise ValueError("ncf must be in [0, 1]")
    return params.working_days * (1 - ncf)


def trip_cost(option: ResidenceOption, params: CostParams) -> Cents:
    """Roundtrip cost by formula: travel time loss plus the mode fare.

    Walking is free (no fare, time loss ignored); tram/bus is a flat
    roundtrip fare that already includes time loss; driving pays per
    mile; rail/air modes pay a flat roundtrip fare. Any stored override
    is ignored here -- see effective_trip_cost.
    """
    mode = option.mode
    if mode is CommuteMode.WALK:
        return 0
    if mode is CommuteMode.TRAM_BUS:
        return usd(params.transit_fare)
    time_loss = 2 * option.one_way_time * params.time_value
    if mode is CommuteMode.CAR:
        fare = 2 * option.distance * params.car_rate
    elif mode in (CommuteMode.TRAIN_AIR, CommuteMode.SHORT_HAUL_AIR):
        fare = params.air_short
    elif mode is CommuteMode.MID_HAUL_AIR:
        fare = params.air_mid
    else:
        fare = params.air_long
    return usd(time_loss + fare)


def effective_trip_cost(option: ResidenceOption, params: CostParams) -> Cents:
    """Trip cost used in monthly totals: the override when set, else formula."""
    if option.trip_cost_override is not None:
        return usd(option.trip_cost_override)
    return trip_cost(option, params)


def monthly_cost(option: ResidenceOption, ncf: NcfLike, params: CostParams) -> MonthlyCost:
    """Monthly cost of housing plus transport at a given NCF.

    Non-hotel options pay one roundtrip per commute day. Hotel options
    batch hotel_batch commute days into one roundtrip (fractional trips
    allowed) and pay hotel_rate for every commute day spent on site.
    """
    feasible = not (option.min_ncf is not None and ncf < option.min_ncf)
    days = commute_days(ncf, params)
    trip = effective_trip_cost(option, params)
    if option.hotel:
        trips = days / params.hotel_batch
        commute = round(trips * trip)
        hotel = round(days * usd(params.hotel_rate))
    else:
        commute = round(days * trip)
        hotel = 0
    return MonthlyCost(
        housing=usd(option.housing), commute=commute, hotel=hotel, feasible=feasible
    )


def in_place_baseline(option: ResidenceOption, params: CostParams) -> MonthlyCost:
    """Comparison lifestyle: the same residence with no telecommuting."""
    return monthly_cost(option, 0, params)


def relocation_baseline(
    options: Sequence[ResidenceOption], params: CostParams
) -> MonthlyCost:
    """Comparison lifestyle: the cheapest residence available at NCF 0."""
    best = optimize_settlement(options, 0, params)
    if best is None:
        raise ValueError("no option is feasible at NCF 0")
    return best[1]


def feasible(
    option: ResidenceOption,
    ncf: NcfLike,
    telecom_cost: Cents,
    params: CostParams,
    baseline: MonthlyCost,
) -> bool:
    """Does the saving versus the baseline strictly exceed the telecom bill?"""
    cost = monthly_cost(option, ncf, params)
    if not cost.feasible:
        return False
    return (baseline.total - cost.total) > telecom_cost


def gain_in_place(
    option: ResidenceOption, ncf: NcfLike, params: CostParams
) -> GainPoint:
    """Monthly saving from staying put and telecommuting at this NCF."""
    cost = monthly_cost(option, ncf, params)
    if not cost.feasible:
        return GainPoint(option, ncf, 0, ncf, flagged=True)
    at_zero = monthly_cost(option, 0, params)
    if at_zero.feasible:
        baseline_ncf: NcfLike = 0
        baseline_total = at_zero.total
        flagged = False
    else:
        baseline_ncf = option.min_ncf if option.min_ncf is not None else 0
        baseline_total = monthly_cost(option, baseline_ncf, params).total
        flagged = True
    return GainPoint(option, ncf, max(0, baseline_total - cost.total), baseline_ncf, flagged)


def telecom_budget(
    option: ResidenceOption,
    ncf: NcfLike,
    params: CostParams,
    baseline: MonthlyCost,
) -> Cents:
    """Largest monthly telecom spend that still leaves a net saving."""
    cost = monthly_cost(option, ncf, params)
    if not cost.feasible:
        return 0
    return max(0, baseline.total - cost.total)


def optimize_settlement(
    options: Sequence[ResidenceOption], ncf: NcfLike, params: CostParams
) -> Optional[tuple[ResidenceOption, MonthlyCost]]:
    """Cheapest feasible residence at this NCF; ties go to shorter distance.

    Returns None when nothing is feasible.
    """
    best: Optional[tuple[ResidenceOption, MonthlyCost]] = None
    for option in options:
        cost = monthly_cost(option, ncf, params)
        if not cost.feasible:
            continue
        if best is None or (cost.total, option.distance) < (
            best[1].total,
            best[0].distance,
        ):
            best = (option, cost)
    return best


def feasible_set(
    options: Sequence[ResidenceOption],
    ncf: NcfLike,
    budget: Cents,
    params: CostParams,
) -> list[ResidenceOption]:
    """All feasible options whose monthly total fits within the budget."""
    result = []
    for option in options:
        cost = monthly_cost(option, ncf, params)
        if cost.feasible and cost.total <= budget:
            result.append(option)
    return result


def gain_curve(
    options: Sequence[ResidenceOption],
    ncf_list: Sequence[NcfLike],
    params: CostParams,
) -> list[GainPoint]:
    """In-place gains over options x NCF values, ordered by distance then NCF."""
    points = []
    for option in sorted(options, key=lambda o: o.distance):
        for ncf in ncf_list:
            points.append(gain_in_place(option, ncf, params))
    return points


def carbon_compare(
    annual_car_miles: float,
    car_emission: float = CAR_KG_PER_MILE,
    jet_emission: float = JET_KG_PER_PAX_HOUR,
) -> float:
    """Jet passenger-hours per year with the same footprint as the driving."""
    if jet_emission <= 0:
        raise ValueError("jet_emission must be > 0")
    if annual_car_miles < 0:
        raise ValueError("annual_car_miles must be >= 0")
    return annual_car_miles * car_emission / jet_emission
