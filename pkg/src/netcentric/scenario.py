"""Scenario files: the single input format for every subcommand.

Line-oriented sections in square brackets with ``key = value`` pairs and
``#`` comments. ``[residence]`` repeats once per candidate residence,
``[tariff]`` once per price override, ``[node]``/``[link]`` once per
explicit topology element. Unknown sections and keys are rejected with
the offending line number; values are validated against the owning
model's constraints.

Sections and keys::

    [costs]      time_value car_rate air_short air_mid air_long
                 transit_fare hotel_rate working_days hotel_batch
    [grid]       ncf            # comma list, strictly increasing in [0,1]
    [residence]  label distance time housing mode hotel min_ncf
                 trip_cost printed_trip_cost
    [tariff]     media proximity price    # price: free | not_supported |
                                          #   <usd>/min | <usd>/message
    [topology]   architecture isps transits access_capacity access_latency
                 peering_capacity peering_latency transit_price margin
    [node]       id role transit_price margin
    [link]       from to capacity latency
    [workload]   arrival_rate duration mix guaranteed overprovision
                 horizon seed sla_loss sla_jitter sla_delay rebate
                 util_knee loss_slope jitter_floor jitter_gain
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Optional, Union

from .econ import CommuteMode, CostParams, ResidenceOption
from .media import MediaClass, Pricing, ProximityTier, SlaSpec, merged_tariffs
from .sim import (
    Architecture,
    DegradationModel,
    DurationKind,
    DurationModel,
    Link,
    ProviderNode,
    Role,
    SimConfig,
    TopologySpec,
)


class ScenarioError(ValueError):
    """Parse or validation failure, carrying the source location."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


@dataclass
class Scenario:
    params: CostParams
    residences: tuple[ResidenceOption, ...]
    ncf_grid: tuple[Fraction, ...]
    tariff_overrides: dict = field(default_factory=dict)
    sim: Optional[SimConfig] = None

    def tariffs(self):
        return merged_tariffs(self.tariff_overrides)

    def residence(self, label: str) -> ResidenceOption:
        for option in self.residences:
            if option.label == label:
                return option
        raise ScenarioError(f"no residence labeled {label!r}")


_SECTION_KEYS = {
    "costs": {
        "time_value",
        "car_rate",
        "air_short",
        "air_mid",
        "air_long",
        "transit_fare",
        "hotel_rate",
        "working_days",
        "hotel_batch",
    },
    "grid": {"ncf"},
    "residence": {
        "label",
        "distance",
        "time",
        "housing",
        "mode",
        "hotel",
        "min_ncf",
        "trip_cost",
        "printed_trip_cost",
    },
    "tariff": {"media", "proximity", "price"},
    "topology": {
        "architecture",
        "isps",
        "transits",
        "access_capacity",
        "access_latency",
        "peering_capacity",
        "peering_latency",
        "transit_price",
        "margin",
    },
    "node": {"id", "role", "transit_price", "margin"},
    "link": {"from", "to", "capacity", "latency"},
    "workload": {
        "arrival_rate",
        "duration",
        "mix",
        "guaranteed",
        "overprovision",
        "horizon",
        "seed",
        "sla_loss",
        "sla_jitter",
        "sla_delay",
        "rebate",
        "util_knee",
        "loss_slope",
        "jitter_floor",
        "jitter_gain",
    },
}

_REPEATABLE = {"residence", "tariff", "node", "link"}


@dataclass
class _Section:
    name: str
    line: int
    pairs: dict[str, tuple[str, int]] = field(default_factory=dict)

    def get(self, key: str) -> Optional[str]:
        item = self.pairs.get(key)
        return item[0] if item else None

    def require(self, key: str) -> str:
        value = self.get(key)
        if value is None:
            raise ScenarioError(f"[{self.name}] is missing required key {key!r}", self.line)
        return value

    def line_of(self, key: str) -> int:
        return self.pairs[key][1]


def _tokenize(text: str) -> list[_Section]:
    sections: list[_Section] = []
    current: Optional[_Section] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ScenarioError("unterminated section header", lineno, len(raw))
            name = line[1:-1].strip().lower()
            if name not in _SECTION_KEYS:
                raise ScenarioError(f"unknown section [{name}]", lineno)
            current = _Section(name, lineno)
            sections.append(current)
            continue
        if "=" not in line:
            raise ScenarioError("expected 'key = value'", lineno, raw.find(line) + 1)
        if current is None:
            raise ScenarioError("key outside of any section", lineno)
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.lower()
        if key not in _SECTION_KEYS[current.name]:
            raise ScenarioError(f"unknown key {key!r} in [{current.name}]", lineno)
        if key in current.pairs:
            raise ScenarioError(f"duplicate key {key!r} in [{current.name}]", lineno)
        current.pairs[key] = (value, lineno)
    seen = set()
    for section in sections:
        if section.name not in _REPEATABLE:
            if section.name in seen:
                raise ScenarioError(f"section [{section.name}] may appear only once", section.line)
            seen.add(section.name)
    return sections


def _float(section: _Section, key: str, default: Optional[float] = None) -> Optional[float]:
    text = section.get(key)
    if text is None:
        return default
    try:
        return float(text)
    except ValueError:
        raise ScenarioError(f"{key}: not a number: {text!r}", section.line_of(key)) from None


def _int(section: _Section, key: str, default: Optional[int] = None) -> Optional[int]:
    text = section.get(key)
    if text is None:
        return default
    try:
        return int(text)
    except ValueError:
        raise ScenarioError(f"{key}: not an integer: {text!r}", section.line_of(key)) from None


def _bool(section: _Section, key: str, default: bool = False) -> bool:
    text = section.get(key)
    if text is None:
        return default
    lowered = text.lower()
    if lowered in ("true", "yes", "1", "on"):
        return True
    if lowered in ("false", "no", "0", "off"):
        return False
    raise ScenarioError(f"{key}: not a boolean: {text!r}", section.line_of(key))


def _fraction(text: str, lineno: int, key: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ScenarioError(f"{key}: not a number: {text!r}", lineno) from None
    if not 0 <= value <= 1:
        raise ScenarioError(f"{key}: {text} outside [0, 1]", lineno)
    return value


def _enum(section: _Section, key: str, enum_cls, default=None):
    text = section.get(key)
    if text is None:
        if default is not None:
            return default
        text = section.require(key)
    token = text.strip().lower()
    for member in enum_cls:
        if member.value == token:
            return member
    choices = ", ".join(m.value for m in enum_cls)
    raise ScenarioError(
        f"{key}: {text!r} is not one of {choices}", section.line_of(key)
    )


def _parse_costs(section: Optional[_Section]) -> CostParams:
    if section is None:
        return CostParams()
    defaults = CostParams()
    try:
        return CostParams(
            time_value=_float(section, "time_value", defaults.time_value),
            car_rate=_float(section, "car_rate", defaults.car_rate),
            air_short=_float(section, "air_short", defaults.air_short),
            air_mid=_float(section, "air_mid", defaults.air_mid),
            air_long=_float(section, "air_long", defaults.air_long),
            transit_fare=_float(section, "transit_fare", defaults.transit_fare),
            hotel_rate=_float(section, "hotel_rate", defaults.hotel_rate),
            working_days=_int(section, "working_days", defaults.working_days),
            hotel_batch=_float(section, "hotel_batch", defaults.hotel_batch),
        )
    except ValueError as exc:
        raise ScenarioError(str(exc), section.line) from None


def _parse_grid(section: Optional[_Section]) -> tuple[Fraction, ...]:
    if section is None:
        raise ScenarioError("missing section [grid]")
    text = section.require("ncf")
    lineno = section.line_of("ncf")
    values = [_fraction(tok.strip(), lineno, "ncf") for tok in text.split(",") if tok.strip()]
    if not values:
        raise ScenarioError("ncf: empty grid", lineno)
    for left, right in zip(values, values[1:]):
        if right <= left:
            raise ScenarioError(
                f"ncf: grid must be strictly increasing, got {left} before {right}", lineno
            )
    return tuple(values)


def _parse_residence(section: _Section) -> ResidenceOption:
    distance = _float(section, "distance")
    if distance is None:
        raise ScenarioError("[residence] is missing required key 'distance'", section.line)
    min_ncf_text = section.get("min_ncf")
    min_ncf = (
        _fraction(min_ncf_text, section.line_of("min_ncf"), "min_ncf")
        if min_ncf_text is not None
        else None
    )
    try:
        return ResidenceOption(
            label=section.get("label") or f"{distance:g}mi",
            distance=distance,
            one_way_time=_require_float(section, "time"),
            housing=_require_float(section, "housing"),
            mode=_enum(section, "mode", CommuteMode),
            hotel=_bool(section, "hotel"),
            min_ncf=min_ncf,
            trip_cost_override=_float(section, "trip_cost"),
            printed_trip_cost=_float(section, "printed_trip_cost"),
        )
    except ValueError as exc:
        raise ScenarioError(str(exc), section.line) from None


def _require_float(section: _Section, key: str) -> float:
    value = _float(section, key)
    if value is None:
        raise ScenarioError(
            f"[{section.name}] is missing required key {key!r}", section.line
        )
    return value


def _parse_price(text: str, lineno: int) -> Pricing:
    token = text.strip().lower().lstrip("$")
    if token == "free":
        return Pricing.free()
    if token in ("not_supported", "unsupported"):
        return Pricing.not_supported()
    if "/" in token:
        amount, _, unit = token.partition("/")
        try:
            rate = float(amount)
        except ValueError:
            raise ScenarioError(f"price: bad amount {amount!r}", lineno) from None
        unit = unit.strip()
        if unit in ("min", "minute"):
            return Pricing.per_minute(rate)
        if unit in ("message", "msg"):
            return Pricing.per_message(rate)
    raise ScenarioError(
        f"price: expected free, not_supported, <usd>/min or <usd>/message, got {text!r}",
        lineno,
    )


def _parse_tariff(section: _Section) -> tuple[tuple[MediaClass, ProximityTier], Pricing]:
    media = _enum(section, "media", MediaClass)
    proximity = _enum(section, "proximity", ProximityTier)
    price = _parse_price(section.require("price"), section.line_of("price"))
    return (media, proximity), price


def _parse_id_list(section: _Section, key: str) -> tuple[str, ...]:
    text = section.get(key)
    if text is None:
        return ()
    if text.strip().isdigit():
        count = int(text)
        prefix = "isp" if key == "isps" else "transit"
        return tuple(f"{prefix}{i}" for i in range(1, count + 1))
    return tuple(tok.strip() for tok in text.split(",") if tok.strip())


def _parse_topology(
    section: _Section, nodes: tuple[ProviderNode, ...], links: tuple[Link, ...]
) -> TopologySpec:
    defaults = TopologySpec(Architecture.CDN_BASED)
    isps = _parse_id_list(section, "isps")
    try:
        return TopologySpec(
            architecture=_enum(section, "architecture", Architecture),
            isps=isps or defaults.isps,
            transits=_parse_id_list(section, "transits"),
            access_capacity=_float(section, "access_capacity", defaults.access_capacity),
            access_latency=_float(section, "access_latency", defaults.access_latency),
            peering_capacity=_float(section, "peering_capacity", defaults.peering_capacity),
            peering_latency=_float(section, "peering_latency", defaults.peering_latency),
            transit_price=_float(section, "transit_price", defaults.transit_price),
            margin=_float(section, "margin", defaults.margin),
            nodes=nodes,
            links=links,
        )
    except ValueError as exc:
        raise ScenarioError(str(exc), section.line) from None


def _parse_node(section: _Section) -> ProviderNode:
    try:
        return ProviderNode(
            id=section.require("id"),
            role=_enum(section, "role", Role),
            transit_price=_float(section, "transit_price", 0.0),
            margin=_float(section, "margin", 0.0),
        )
    except ValueError as exc:
        raise ScenarioError(str(exc), section.line) from None


def _parse_link(section: _Section) -> Link:
    try:
        return Link(
            a=section.require("from"),
            b=section.require("to"),
            capacity=_require_float(section, "capacity"),
            latency=_float(section, "latency", 0.0),
        )
    except ValueError as exc:
        raise ScenarioError(str(exc), section.line) from None


def _parse_mix(section: _Section) -> tuple[tuple[MediaClass, float], ...]:
    text = section.get("mix")
    if text is None:
        return ((MediaClass.VISUAL, 1.0),)
    lineno = section.line_of("mix")
    mix = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        name, _, weight_text = item.partition(":")
        token = name.strip().lower()
        media = next((m for m in MediaClass if m.value == token), None)
        if media is None:
            raise ScenarioError(f"mix: unknown media class {name!r}", lineno)
        try:
            weight = float(weight_text) if weight_text else 1.0
        except ValueError:
            raise ScenarioError(f"mix: bad weight {weight_text!r}", lineno) from None
        if weight <= 0:
            raise ScenarioError("mix: weights must be > 0", lineno)
        mix.append((media, weight))
    if not mix:
        raise ScenarioError("mix: empty", lineno)
    return tuple(mix)


def _parse_duration(section: _Section) -> DurationModel:
    text = section.get("duration")
    if text is None:
        return DurationModel(DurationKind.FIXED, 30.0)
    lineno = section.line_of("duration")
    parts = text.split()
    if len(parts) != 2:
        raise ScenarioError(
            f"duration: expected 'fixed <minutes>' or 'exponential <mean>', got {text!r}",
            lineno,
        )
    kind_token, amount_text = parts
    kind = {"fixed": DurationKind.FIXED, "exponential": DurationKind.EXPONENTIAL}.get(
        kind_token.lower()
    )
    if kind is None:
        raise ScenarioError(f"duration: unknown kind {kind_token!r}", lineno)
    try:
        minutes = float(amount_text)
    except ValueError:
        raise ScenarioError(f"duration: bad minutes {amount_text!r}", lineno) from None
    try:
        return DurationModel(kind, minutes)
    except ValueError as exc:
        raise ScenarioError(str(exc), lineno) from None


def _parse_sim(
    topology_section: Optional[_Section],
    workload_section: Optional[_Section],
    nodes: tuple[ProviderNode, ...],
    links: tuple[Link, ...],
) -> Optional[SimConfig]:
    if topology_section is None and workload_section is None:
        if nodes or links:
            raise ScenarioError("[node]/[link] sections given without [topology]")
        return None
    if topology_section is None:
        raise ScenarioError("missing section [topology] (required by [workload])")
    topo = _parse_topology(topology_section, nodes, links)
    if workload_section is None:
        return SimConfig(topology=topo)
    section = workload_section
    degradation_defaults = DegradationModel()
    sla_defaults = SlaSpec()
    try:
        sla = SlaSpec(
            max_loss=_float(section, "sla_loss", sla_defaults.max_loss),
            max_jitter=_float(section, "sla_jitter", sla_defaults.max_jitter),
            max_delay=_float(section, "sla_delay", sla_defaults.max_delay),
        )
        degradation = DegradationModel(
            knee=_float(section, "util_knee", degradation_defaults.knee),
            loss_slope=_float(section, "loss_slope", degradation_defaults.loss_slope),
            jitter_floor=_float(section, "jitter_floor", degradation_defaults.jitter_floor),
            jitter_gain=_float(section, "jitter_gain", degradation_defaults.jitter_gain),
        )
        return SimConfig(
            topology=topo,
            arrival_rate=_float(section, "arrival_rate", 10.0),
            duration=_parse_duration(section),
            media_mix=_parse_mix(section),
            guaranteed=_bool(section, "guaranteed"),
            overprovision=_float(section, "overprovision", 1.0),
            sla=sla,
            horizon=_int(section, "horizon", 480),
            seed=_int(section, "seed", 0),
            degradation=degradation,
            sla_rebate=_float(section, "rebate", 1.0),
        )
    except ValueError as exc:
        raise ScenarioError(str(exc), section.line) from None


def parse_scenario_text(text: str) -> Scenario:
    sections = _tokenize(text)
    by_name: dict[str, _Section] = {}
    residences: list[ResidenceOption] = []
    tariffs: dict = {}
    nodes: list[ProviderNode] = []
    links: list[Link] = []
    for section in sections:
        if section.name == "residence":
            residences.append(_parse_residence(section))
        elif section.name == "tariff":
            key, pricing = _parse_tariff(section)
            tariffs[key] = pricing
        elif section.name == "node":
            nodes.append(_parse_node(section))
        elif section.name == "link":
            links.append(_parse_link(section))
        else:
            by_name[section.name] = section

    if not residences:
        raise ScenarioError("missing section [residence] (at least one required)")
    labels = [r.label for r in residences]
    duplicates = {l for l in labels if labels.count(l) > 1}
    if duplicates:
        raise ScenarioError(f"duplicate residence labels: {', '.join(sorted(duplicates))}")

    params = _parse_costs(by_name.get("costs"))
    grid = _parse_grid(by_name.get("grid"))
    sim = _parse_sim(
        by_name.get("topology"), by_name.get("workload"), tuple(nodes), tuple(links)
    )
    return Scenario(
        params=params,
        residences=tuple(residences),
        ncf_grid=grid,
        tariff_overrides=tariffs,
        sim=sim,
    )


def parse_scenario(path: Union[str, Path]) -> Scenario:
    text = Path(path).read_text(encoding="utf-8")
    return parse_scenario_text(text)


def bundled_scenario_path() -> Path:
    """Path of the packaged sample scenario (the reference cost grid)."""
    return Path(str(resources.files("netcentric") / "fixtures" / "table3.scn"))
