"""Media classes, bandwidth floors, QoS tiers, and proximity tariffs.

Five classes of person-to-person exchange carried over a network, from
short text messages up to rich multimodal telepresence, each with a
minimum bandwidth range and a QoS tier. Tariffs depend on how far the
parties are in network terms: free on a LAN, cheap-to-metered over metro
broadband, metered or unavailable over mobile tiers.

Also answers the planning questions: what access speed does a media
class need once best-effort over-provisioning is factored in, which
classes can a given connection sustain, and what does a monthly usage
mix cost.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Iterable, Mapping, Optional, Sequence

from .econ import Cents, usd


class MediaClass(Enum):
    MESSAGE = "message"
    VERBAL = "verbal"
    VISUAL = "visual"
    TELEPRESENCE = "telepresence"
    RICH_MULTIMODAL = "rich_multimodal"


class QosTier(IntEnum):
    LOW = 1
    MEDIUM = 2
    HIGH = 3
    VERY_HIGH = 4


class Reliability(Enum):
    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"


class ProximityTier(Enum):
    LOCAL_LAN = "local_lan"
    METRO_DSL = "metro_dsl"
    NATIONAL_MOBILE = "national_mobile"
    INTERNATIONAL_MOBILE = "international_mobile"


class Bound(Enum):
    LOW_END = "low"
    HIGH_END = "high"


# A message is a 160-byte payload, not a sustained stream; this is the
# sustained-rate stand-in used when a strict bandwidth check is wanted.
MESSAGE_RATE_MBPS = 0.002
MESSAGE_PAYLOAD_BYTES = 160


@dataclass(frozen=True)
class MediaProfile:
    media: MediaClass
    low_mbps: float
    high_mbps: float
    qos: QosTier
    reliability: Reliability
    payload_bytes: Optional[int] = None

    def __post_init__(self) -> None:
        if self.low_mbps > self.high_mbps:
            raise ValueError("bandwidth range inverted")


PROFILES: dict[MediaClass, MediaProfile] = {
    MediaClass.MESSAGE: MediaProfile(
        MediaClass.MESSAGE,
        MESSAGE_RATE_MBPS,
        MESSAGE_RATE_MBPS,
        QosTier.LOW,
        Reliability.MEDIUM,
        payload_bytes=MESSAGE_PAYLOAD_BYTES,
    ),
    MediaClass.VERBAL: MediaProfile(
        MediaClass.VERBAL, 0.009, 0.009, QosTier.HIGH, Reliability.HIGH
    ),
    MediaClass.VISUAL: MediaProfile(
        MediaClass.VISUAL, 0.2, 2.0, QosTier.MEDIUM, Reliability.LOW
    ),
    MediaClass.TELEPRESENCE: MediaProfile(
        MediaClass.TELEPRESENCE, 2.0, 4.0, QosTier.HIGH, Reliability.HIGH
    ),
    MediaClass.RICH_MULTIMODAL: MediaProfile(
        MediaClass.RICH_MULTIMODAL, 5.0, 20.0, QosTier.VERY_HIGH, Reliability.HIGH
    ),
}


def profile(media: MediaClass) -> MediaProfile:
    return PROFILES[media]


class PricingKind(Enum):
    FREE = "free"
    PER_MESSAGE = "per_message"
    PER_MINUTE = "per_minute"
    NOT_SUPPORTED = "not_supported"


@dataclass(frozen=True)
class Pricing:
    kind: PricingKind
    rate: float = 0.0  # USD per minute or per message

    @classmethod
    def free(cls) -> "Pricing":
        return cls(PricingKind.FREE)

    @classmethod
    def per_minute(cls, rate: float) -> "Pricing":
        return cls(PricingKind.PER_MINUTE, rate)

    @classmethod
    def per_message(cls, rate: float) -> "Pricing":
        return cls(PricingKind.PER_MESSAGE, rate)

    @classmethod
    def not_supported(cls) -> "Pricing":
        return cls(PricingKind.NOT_SUPPORTED)


@dataclass(frozen=True)
class TariffEntry:
    media: MediaClass
    proximity: ProximityTier
    pricing: Pricing


TariffTable = Mapping[tuple[MediaClass, ProximityTier], Pricing]

_LAN = {(m, ProximityTier.LOCAL_LAN): Pricing.free() for m in MediaClass}

DEFAULT_TARIFFS: dict[tuple[MediaClass, ProximityTier], Pricing] = {
    **_LAN,
    # Metro broadband: messaging, voice, and video ride for free; the two
    # heavy classes are leased-line territory, priced per minute.
    (MediaClass.MESSAGE, ProximityTier.METRO_DSL): Pricing.free(),
    (MediaClass.VERBAL, ProximityTier.METRO_DSL): Pricing.free(),
    (MediaClass.VISUAL, ProximityTier.METRO_DSL): Pricing.free(),
    (MediaClass.TELEPRESENCE, ProximityTier.METRO_DSL): Pricing.per_minute(0.5),
    (MediaClass.RICH_MULTIMODAL, ProximityTier.METRO_DSL): Pricing.per_minute(10.0),
    # Mobile, domestic.
    (MediaClass.MESSAGE, ProximityTier.NATIONAL_MOBILE): Pricing.per_message(0.1),
    (MediaClass.VERBAL, ProximityTier.NATIONAL_MOBILE): Pricing.per_minute(0.25),
    (MediaClass.VISUAL, ProximityTier.NATIONAL_MOBILE): Pricing.per_minute(0.05),
    (MediaClass.TELEPRESENCE, ProximityTier.NATIONAL_MOBILE): Pricing.not_supported(),
    (MediaClass.RICH_MULTIMODAL, ProximityTier.NATIONAL_MOBILE): Pricing.not_supported(),
    # Mobile, roaming.
    (MediaClass.MESSAGE, ProximityTier.INTERNATIONAL_MOBILE): Pricing.per_message(0.5),
    (MediaClass.VERBAL, ProximityTier.INTERNATIONAL_MOBILE): Pricing.per_minute(4.0),
    (MediaClass.VISUAL, ProximityTier.INTERNATIONAL_MOBILE): Pricing.per_minute(10.0),
    (MediaClass.TELEPRESENCE, ProximityTier.INTERNATIONAL_MOBILE): Pricing.not_supported(),
    (MediaClass.RICH_MULTIMODAL, ProximityTier.INTERNATIONAL_MOBILE): Pricing.not_supported(),
}


def tariff(
    media: MediaClass,
    proximity: ProximityTier,
    tariffs: Optional[TariffTable] = None,
) -> TariffEntry:
    """Price of one media class at one proximity tier."""
    table = DEFAULT_TARIFFS if tariffs is None else tariffs
    return TariffEntry(media, proximity, table[(media, proximity)])


def required_access(
    media: MediaClass,
    overprovision: float = 1.0,
    bound: Bound = Bound.HIGH_END,
) -> float:
    """Access speed (Mbps) needed for a media class at an over-provisioning factor."""
    if overprovision < 1:
        raise ValueError("overprovision factor must be >= 1")
    prof = profile(media)
    base = prof.low_mbps if bound is Bound.LOW_END else prof.high_mbps
    return base * overprovision


@dataclass(frozen=True)
class ConnectionProfile:
    """An access connection as sold: speeds, quality metrics, unit price.

    delay is a round-trip figure unless delay_is_rtt is False, in which
    case it is one-way and doubled before SLA comparison.
    """

    down: float
    up: float
    loss: float = 0.0
    jitter: float = 0.0
    delay: float = 0.0
    price_per_mbps: float = 0.0
    delay_is_rtt: bool = True

    def __post_init__(self) -> None:
        if min(self.down, self.up, self.loss, self.jitter, self.delay) < 0:
            raise ValueError("connection metrics must be >= 0")
        if self.loss > 100:
            raise ValueError("loss is a percentage")

    @property
    def rtt(self) -> float:
        return self.delay if self.delay_is_rtt else 2 * self.delay


@dataclass(frozen=True)
class SlaSpec:
    max_loss: float = 0.2  # percent
    max_jitter: float = 10.0  # ms
    max_delay: float = 200.0  # ms round trip

    def __post_init__(self) -> None:
        if min(self.max_loss, self.max_jitter, self.max_delay) <= 0:
            raise ValueError("SLA thresholds must be > 0")


@dataclass(frozen=True)
class TierThresholds:
    """What a best-effort connection must show to satisfy each QoS tier.

    Low is always satisfied; Medium needs loss under medium_max_loss;
    High needs the full SLA; VeryHigh additionally needs jitter at or
    under very_high_max_jitter.
    """

    medium_max_loss: float = 1.0  # percent
    very_high_max_jitter: float = 5.0  # ms


DEFAULT_TIER_THRESHOLDS = TierThresholds()


def satisfied_tier(
    conn: ConnectionProfile,
    sla: SlaSpec = SlaSpec(),
    thresholds: TierThresholds = DEFAULT_TIER_THRESHOLDS,
) -> QosTier:
    """Highest QoS tier this connection's measured quality satisfies."""
    meets_sla = (
        conn.loss <= sla.max_loss
        and conn.jitter <= sla.max_jitter
        and conn.rtt <= sla.max_delay
    )
    if meets_sla:
        if conn.jitter <= thresholds.very_high_max_jitter:
            return QosTier.VERY_HIGH
        return QosTier.HIGH
    if conn.loss <= thresholds.medium_max_loss:
        return QosTier.MEDIUM
    return QosTier.LOW


def feasible_media(
    conn: ConnectionProfile,
    overprovision: float = 1.0,
    sla: SlaSpec = SlaSpec(),
    guaranteed: bool = False,
    strict_message: bool = False,
    thresholds: TierThresholds = DEFAULT_TIER_THRESHOLDS,
) -> set[MediaClass]:
    """Media classes this connection can sustain.

    A guaranteed line is checked at the raw bandwidth floor and skips
    the quality-tier test; a best-effort line must buy overprovision
    times the floor and must satisfy the class's QoS tier. Messages are
    treated as a near-zero load, feasible on any link, unless
    strict_message applies the sustained-rate stand-in instead.
    """
    factor = 1.0 if guaranteed else overprovision
    tier = satisfied_tier(conn, sla, thresholds)
    result = set()
    for media, prof in PROFILES.items():
        if media is MediaClass.MESSAGE and not strict_message:
            enough_bandwidth = True
        else:
            enough_bandwidth = conn.down >= required_access(media, factor, Bound.HIGH_END)
        qos_ok = guaranteed or prof.qos <= tier
        if enough_bandwidth and qos_ok:
            result.add(media)
    return result


@dataclass(frozen=True)
class MediaCostResult:
    """Total monthly cost of a usage mix plus any unsupported entries."""

    total: Cents
    unsupported: tuple[tuple[MediaClass, ProximityTier], ...] = ()

    @property
    def feasible(self) -> bool:
        return not self.unsupported


def monthly_media_cost(
    mix: Iterable[tuple[MediaClass, ProximityTier, float]],
    tariffs: Optional[TariffTable] = None,
) -> MediaCostResult:
    """Cost of a monthly usage mix of (media, proximity, minutes-or-messages).

    Unsupported pairs do not price; they flag the result infeasible.
    """
    total = 0
    unsupported = []
    for media, proximity, usage in mix:
        if usage < 0:
            raise ValueError("usage must be >= 0")
        pricing = tariff(media, proximity, tariffs).pricing
        if pricing.kind is PricingKind.NOT_SUPPORTED:
            unsupported.append((media, proximity))
        elif pricing.kind is PricingKind.FREE:
            pass
        else:
            total += round(usd(pricing.rate) * usage)
    return MediaCostResult(total=total, unsupported=tuple(unsupported))


def access_cost(conn: ConnectionProfile) -> Cents:
    """Monthly price of the access line at its advertised download speed."""
    return usd(conn.down * conn.price_per_mbps)


def merged_tariffs(
    overrides: Mapping[tuple[MediaClass, ProximityTier], Pricing]
) -> dict[tuple[MediaClass, ProximityTier], Pricing]:
    """Default tariff table with specific entries replaced."""
    table = dict(DEFAULT_TARIFFS)
    table.update(overrides)
    return table
