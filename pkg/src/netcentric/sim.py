"""Deterministic discrete-event simulator for inter-provider QoS sessions.

Two session architectures are modeled. In the CDN-based one, a
corporation parks its interactive content on a content delivery network
that peers directly with every last-mile ISP; admission runs once at the
customer interface and settlement takes two billing cycles (ISP bills
the CDN, the CDN bills the corporation with a margin). In the
walled-garden one, a content platform is embedded inside each last-mile
ISP and the ISP bills the corporation directly in a single cycle. A
general chain of transit providers is also supported for completeness.

Sessions arrive on a seeded pseudo-random stream, reserve bandwidth on
every link of their path if admitted, and at completion are checked
against the SLA and billed. Everything is deterministic for a given
config: time is integer minutes, capacities are tracked in integer
kbps, money in integer cents, and the arrival stream consumes only
``random.Random.random()`` draws (Mersenne Twister), which the language
documents as reproducible across platforms and versions.

Best-effort degradation model: a session that peaked at path utilization
u experiences loss max(0, (u - 0.7) / 0.3 * 2.0) percent and jitter
5 + 50 * u**2 ms. Guaranteed sessions see nominal loss and jitter and
are judged on path delay alone. Constants are overridable per config.
"""

from __future__ import annotations

import heapq
import math
import random
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Callable, Optional, Sequence

from .econ import Cents
from .media import MediaClass, SlaSpec, profile


class Role(Enum):
    LAST_MILE_ISP = "last_mile_isp"
    TRANSIT_ISP = "transit_isp"
    CDN_OPERATOR = "cdn_operator"
    CONTENT_PLATFORM = "content_platform"
    CORPORATION = "corporation"


class Architecture(Enum):
    CDN_BASED = "cdn_based"
    WALLED_GARDEN = "walled_garden"
    GENERAL_CHAIN = "general_chain"


class TopologyError(ValueError):
    pass


@dataclass(frozen=True)
class ProviderNode:
    id: str
    role: Role
    transit_price: float = 0.0  # USD per Mbps-minute
    margin: float = 0.0

    def __post_init__(self) -> None:
        if not 0 <= self.margin < 1:
            raise ValueError(f"node {self.id}: margin must be in [0, 1)")
        if self.transit_price < 0:
            raise ValueError(f"node {self.id}: transit_price must be >= 0")


@dataclass(frozen=True)
class Link:
    a: str
    b: str
    capacity: float  # Mbps
    latency: float  # ms one-way

    def __post_init__(self) -> None:
        if self.capacity <= 0:
            raise ValueError(f"link {self.id}: capacity must be > 0")
        if self.latency < 0:
            raise ValueError(f"link {self.id}: latency must be >= 0")

    @property
    def id(self) -> str:
        return f"{self.a}--{self.b}"

    @property
    def capacity_kbps(self) -> int:
        return round(self.capacity * 1000)


def _homes(isp_id: str) -> str:
    """Graph endpoint standing for the ISP's subscriber side."""
    return f"homes.{isp_id}"


@dataclass(frozen=True)
class TopologySpec:
    """Compact description from which a Topology is generated.

    isps lists last-mile provider ids; transits, for the general chain,
    lists transit providers crossed between every ISP and the
    corporation. Explicit nodes/links add to or override the generated
    ones (a link declared here replaces the generated link between the
    same endpoints).
    """

    architecture: Architecture
    isps: tuple[str, ...] = ("isp1",)
    transits: tuple[str, ...] = ()
    access_capacity: float = 100.0
    access_latency: float = 5.0
    peering_capacity: float = 1000.0
    peering_latency: float = 10.0
    transit_price: float = 0.001  # USD per Mbps-minute
    margin: float = 0.2
    nodes: tuple[ProviderNode, ...] = ()
    links: tuple[Link, ...] = ()


@dataclass
class Topology:
    architecture: Architecture
    nodes: dict[str, ProviderNode]
    links: dict[str, Link]
    paths: dict[str, tuple[str, ...]]  # isp id -> link ids from homes to content
    spec: TopologySpec

    @property
    def isp_ids(self) -> list[str]:
        return sorted(
            n.id for n in self.nodes.values() if n.role is Role.LAST_MILE_ISP
        )

    @property
    def platform_count(self) -> int:
        """Content serving points: platforms embedded in ISPs, or one CDN."""
        if self.architecture is Architecture.CDN_BASED:
            return 1
        return sum(
            1 for n in self.nodes.values() if n.role is Role.CONTENT_PLATFORM
        )

    def node_of_role(self, role: Role) -> ProviderNode:
        matches = [n for n in self.nodes.values() if n.role is role]
        if len(matches) != 1:
            raise TopologyError(f"expected exactly one {role.value} node")
        return matches[0]


def build_topology(spec: TopologySpec) -> Topology:
    """Instantiate and validate a topology from its spec.

    Every ISP gets an access link from its subscriber side. The CDN
    architecture adds one CDN operator with a peering link per ISP; the
    walled garden adds one content platform per ISP inside that ISP's
    network; the general chain threads every ISP through the transit
    providers in order, ending at the corporation.
    """
    nodes: dict[str, ProviderNode] = {}

    def add_node(node: ProviderNode) -> None:
        if node.id in nodes:
            raise TopologyError(f"duplicate node id: {node.id}")
        nodes[node.id] = node

    for node in spec.nodes:
        add_node(node)
    for isp in spec.isps:
        if isp not in nodes:
            add_node(ProviderNode(isp, Role.LAST_MILE_ISP, spec.transit_price))

    isp_ids = sorted(n.id for n in nodes.values() if n.role is Role.LAST_MILE_ISP)
    if not isp_ids:
        raise TopologyError("at least one last-mile ISP is required")

    def roles(role: Role) -> list[ProviderNode]:
        return [n for n in nodes.values() if n.role is role]

    if not roles(Role.CORPORATION):
        add_node(ProviderNode("corp", Role.CORPORATION))
    elif len(roles(Role.CORPORATION)) > 1:
        raise TopologyError("exactly one corporation is required")
    corp = roles(Role.CORPORATION)[0]

    targets: dict[str, str] = {}
    generated: list[Link] = []
    if spec.architecture is Architecture.CDN_BASED:
        cdns = roles(Role.CDN_OPERATOR)
        if len(cdns) > 1:
            raise TopologyError("CDN architecture requires exactly one CDN operator")
        if roles(Role.CONTENT_PLATFORM):
            raise TopologyError("CDN architecture does not embed content platforms")
        if not cdns:
            add_node(ProviderNode("cdn", Role.CDN_OPERATOR, margin=spec.margin))
            cdns = roles(Role.CDN_OPERATOR)
        cdn = cdns[0]
        for isp in isp_ids:
            generated.append(
                Link(isp, cdn.id, spec.peering_capacity, spec.peering_latency)
            )
            targets[isp] = cdn.id
    elif spec.architecture is Architecture.WALLED_GARDEN:
        if roles(Role.CDN_OPERATOR):
            raise TopologyError("walled garden has no CDN operator")
        declared = {n.id for n in roles(Role.CONTENT_PLATFORM)}
        expected = {f"platform.{isp}" for isp in isp_ids}
        if declared - expected:
            raise TopologyError(
                "content platforms must be named platform.<isp>: "
                + ", ".join(sorted(declared - expected))
            )
        for isp in isp_ids:
            platform_id = f"platform.{isp}"
            if platform_id not in declared:
                add_node(
                    ProviderNode(platform_id, Role.CONTENT_PLATFORM, margin=spec.margin)
                )
            generated.append(
                Link(isp, platform_id, spec.peering_capacity, spec.peering_latency)
            )
            targets[isp] = platform_id
    else:  # GENERAL_CHAIN
        chain: list[str] = []
        for transit in spec.transits:
            if transit not in nodes:
                add_node(ProviderNode(transit, Role.TRANSIT_ISP, spec.transit_price))
            chain.append(transit)
        for isp in isp_ids:
            hops = [isp, *chain, corp.id]
            for a, b in zip(hops, hops[1:]):
                generated.append(
                    Link(a, b, spec.peering_capacity, spec.peering_latency)
                )
            targets[isp] = corp.id

    for isp in isp_ids:
        generated.append(
            Link(_homes(isp), isp, spec.access_capacity, spec.access_latency)
        )

    links: dict[str, Link] = {}
    pseudo = {_homes(isp) for isp in isp_ids}

    def endpoints_known(link: Link) -> bool:
        return all(end in nodes or end in pseudo for end in (link.a, link.b))

    def add_link(link: Link, explicit: bool) -> None:
        if not endpoints_known(link):
            raise TopologyError(f"link {link.id} references unknown node")
        key = frozenset((link.a, link.b))
        existing = next(
            (l for l in links.values() if frozenset((l.a, l.b)) == key), None
        )
        if existing is not None:
            if explicit:
                raise TopologyError(f"duplicate link between {link.a} and {link.b}")
            return  # an explicit link already covers this pair
        links[link.id] = link

    for link in spec.links:
        add_link(link, explicit=True)
    for link in generated:
        add_link(link, explicit=False)

    adjacency: dict[str, list[tuple[str, str]]] = {}
    for link in links.values():
        adjacency.setdefault(link.a, []).append((link.b, link.id))
        adjacency.setdefault(link.b, []).append((link.a, link.id))
    for neighbors in adjacency.values():
        neighbors.sort()

    def shortest_path(start: str, goal: str) -> Optional[tuple[str, ...]]:
        seen = {start: ()}
        frontier = [start]
        while frontier:
            nxt = []
            for vertex in frontier:
                if vertex == goal:
                    return seen[vertex]
                for neighbor, link_id in adjacency.get(vertex, []):
                    if neighbor not in seen:
                        seen[neighbor] = seen[vertex] + (link_id,)
                        nxt.append(neighbor)
            frontier = nxt
        return seen.get(goal)

    paths: dict[str, tuple[str, ...]] = {}
    for isp in isp_ids:
        path = shortest_path(_homes(isp), targets[isp])
        if not path:
            raise TopologyError(f"no path from {_homes(isp)} to {targets[isp]}")
        paths[isp] = path

    return Topology(spec.architecture, nodes, links, paths, spec)


@dataclass(frozen=True)
class SessionRequest:
    id: str
    user: str
    isp: str
    media: MediaClass
    demand: float  # Mbps
    arrival: int  # minutes
    duration: int  # minutes


class ReservationState(Enum):
    ACTIVE = "active"
    COMPLETED = "completed"
    REJECTED = "rejected"
    SLA_VIOLATED = "sla_violated"


@dataclass
class Reservation:
    request: SessionRequest
    path: tuple[str, ...]
    reserved_kbps: int
    state: ReservationState
    peak_utilization: float = 0.0
    end: Optional[int] = None
    forced: bool = False
    violation: Optional[str] = None

    @property
    def reserved(self) -> float:
        return self.reserved_kbps / 1000.0


class BillingCycle(Enum):
    ISP_TO_CDN = "isp_to_cdn"
    CDN_TO_CORP = "cdn_to_corp"
    ISP_TO_CORP = "isp_to_corp"


@dataclass(frozen=True)
class BillingRecord:
    payer: str
    payee: str
    amount: Cents
    cycle: BillingCycle
    session_id: str
    violated: bool = False


@dataclass(frozen=True)
class SlaVerdict:
    passed: bool
    reason: Optional[str] = None  # "delay", "loss", or "jitter"


@dataclass(frozen=True)
class DegradationModel:
    """Loss/jitter a best-effort session sees as a function of peak
    path utilization."""

    knee: float = 0.7
    loss_slope: float = 2.0  # percent at full saturation past the knee
    jitter_floor: float = 5.0  # ms
    jitter_gain: float = 50.0  # ms at u = 1

    def loss_pct(self, utilization: float) -> float:
        span = 1.0 - self.knee
        return max(0.0, (utilization - self.knee) / span * self.loss_slope)

    def jitter_ms(self, utilization: float) -> float:
        return self.jitter_floor + self.jitter_gain * utilization**2


class DurationKind(Enum):
    FIXED = "fixed"
    EXPONENTIAL = "exponential"


@dataclass(frozen=True)
class DurationModel:
    kind: DurationKind
    minutes: float

    def __post_init__(self) -> None:
        if self.minutes <= 0:
            raise ValueError("duration must be > 0 minutes")


@dataclass(frozen=True)
class SimConfig:
    topology: TopologySpec
    arrival_rate: float = 10.0  # sessions per hour
    duration: DurationModel = DurationModel(DurationKind.FIXED, 30.0)
    media_mix: tuple[tuple[MediaClass, float], ...] = ((MediaClass.VISUAL, 1.0),)
    guaranteed: bool = False
    overprovision: float = 1.0
    sla: SlaSpec = SlaSpec()
    horizon: int = 480  # minutes
    seed: int = 0
    degradation: DegradationModel = DegradationModel()
    sla_rebate: float = 1.0  # fraction of charges waived on violation
    trace: Optional[Callable[[dict], None]] = None

    def __post_init__(self) -> None:
        if self.arrival_rate < 0:
            raise ValueError("arrival_rate must be >= 0")
        if self.horizon <= 0:
            raise ValueError("horizon must be > 0")
        if self.overprovision < 1:
            raise ValueError("overprovision factor must be >= 1")
        if not self.media_mix or any(w <= 0 for _, w in self.media_mix):
            raise ValueError("media_mix needs positive weights")
        if not 0 <= self.sla_rebate <= 1:
            raise ValueError("sla_rebate must be in [0, 1]")


@dataclass(frozen=True)
class SimReport:
    offered: int
    admitted: int
    rejected: int
    completed: int
    sla_violated: int
    forced_completions: int
    acceptance_ratio: float
    sla_violation_rate: float
    revenue: tuple[tuple[str, Cents], ...]  # payee -> cents, sorted by party
    expense: tuple[tuple[str, Cents], ...]  # payer -> cents, sorted by party
    link_peak: tuple[tuple[str, float], ...]
    link_mean: tuple[tuple[str, float], ...]
    peak_utilization: float
    mean_utilization: float

    def to_csv(self) -> str:
        lines = ["metric,value"]
        lines.append(f"offered,{self.offered}")
        lines.append(f"admitted,{self.admitted}")
        lines.append(f"rejected,{self.rejected}")
        lines.append(f"completed,{self.completed}")
        lines.append(f"sla_violated,{self.sla_violated}")
        lines.append(f"forced_completions,{self.forced_completions}")
        lines.append(f"acceptance_ratio,{self.acceptance_ratio:.6f}")
        lines.append(f"sla_violation_rate,{self.sla_violation_rate:.6f}")
        lines.append(f"peak_utilization,{self.peak_utilization:.6f}")
        lines.append(f"mean_utilization,{self.mean_utilization:.6f}")
        for party, cents in self.revenue:
            lines.append(f"revenue.{party},{cents / 100:.2f}")
        for party, cents in self.expense:
            lines.append(f"expense.{party},{cents / 100:.2f}")
        for link_id, value in self.link_peak:
            lines.append(f"link_peak.{link_id},{value:.6f}")
        for link_id, value in self.link_mean:
            lines.append(f"link_mean.{link_id},{value:.6f}")
        return "\n".join(lines) + "\n"


@dataclass
class SimResult:
    report: SimReport
    reservations: list[Reservation]
    billing: list[BillingRecord]
    topology: Topology


@dataclass
class NetworkState:
    """Current reservations per link, in integer kbps."""

    topology: Topology
    reserved: dict[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for link_id in self.topology.links:
            self.reserved.setdefault(link_id, 0)

    def utilization(self, link_id: str) -> float:
        return self.reserved[link_id] / self.topology.links[link_id].capacity_kbps

    def fits(self, path: Sequence[str], demand_kbps: int) -> bool:
        return all(
            self.reserved[link_id] + demand_kbps
            <= self.topology.links[link_id].capacity_kbps
            for link_id in path
        )

    def reserve(self, path: Sequence[str], demand_kbps: int) -> None:
        for link_id in path:
            self.reserved[link_id] += demand_kbps

    def release(self, path: Sequence[str], demand_kbps: int) -> None:
        for link_id in path:
            self.reserved[link_id] -= demand_kbps


@dataclass(frozen=True)
class AdmissionDecision:
    accepted: bool
    effective_kbps: int
    reason: Optional[str] = None


def effective_demand_kbps(demand: float, guaranteed: bool, overprovision: float) -> int:
    """Bandwidth actually reserved: raw demand, or scaled by the
    over-provisioning factor on best-effort service."""
    factor = 1.0 if guaranteed else overprovision
    return round(demand * 1000 * factor)


def admit(
    req: SessionRequest,
    topo: Topology,
    state: NetworkState,
    guaranteed: bool = True,
    overprovision: float = 1.0,
) -> AdmissionDecision:
    """Single admission decision at the customer interface.

    Accepts only if every link on the user's path can hold the
    effective demand on top of what is already reserved.
    """
    path = topo.paths[req.isp]
    demand_kbps = effective_demand_kbps(req.demand, guaranteed, overprovision)
    if state.fits(path, demand_kbps):
        return AdmissionDecision(True, demand_kbps)
    return AdmissionDecision(False, demand_kbps, reason="capacity")


def path_rtt(resv: Reservation, topo: Topology) -> float:
    return 2 * sum(topo.links[link_id].latency for link_id in resv.path)


def verify_sla(
    resv: Reservation,
    topo: Topology,
    sla: SlaSpec,
    guaranteed: bool = True,
    model: DegradationModel = DegradationModel(),
) -> SlaVerdict:
    """Check a session against the SLA at completion time.

    Delay is the path round trip. Guaranteed sessions carry nominal
    loss and jitter; best-effort sessions take them from the
    degradation model at the session's peak path utilization.
    """
    if path_rtt(resv, topo) > sla.max_delay:
        return SlaVerdict(False, "delay")
    if guaranteed:
        return SlaVerdict(True)
    if model.loss_pct(resv.peak_utilization) > sla.max_loss:
        return SlaVerdict(False, "loss")
    if model.jitter_ms(resv.peak_utilization) > sla.max_jitter:
        return SlaVerdict(False, "jitter")
    return SlaVerdict(True)


def bill(
    resv: Reservation,
    topo: Topology,
    sla_rebate: float = 1.0,
) -> list[BillingRecord]:
    """Settlement records for a finished session.

    CDN architecture: the ISP bills the CDN for transit, and the CDN
    bills the corporation the same amount plus its margin. Walled
    garden: the ISP bills the corporation directly, margin included.
    General chain: every carrier on the path bills the corporation for
    its own segment. Violated sessions are billed scaled down by the
    rebate (full rebate by default: zero-amount records, flagged).
    """
    if resv.state not in (ReservationState.COMPLETED, ReservationState.SLA_VIOLATED):
        raise ValueError("only finished sessions can be billed")
    violated = resv.state is ReservationState.SLA_VIOLATED
    minutes = (resv.end or resv.request.arrival) - resv.request.arrival
    isp = topo.nodes[resv.request.isp]

    def charge(base_cents: Cents) -> Cents:
        if violated:
            return round(base_cents * (1 - sla_rebate))
        return base_cents

    sid = resv.request.id
    records = []
    if topo.architecture is Architecture.CDN_BASED:
        cdn = topo.node_of_role(Role.CDN_OPERATOR)
        corp = topo.node_of_role(Role.CORPORATION)
        transit = round(resv.reserved * minutes * isp.transit_price * 100)
        margin_share = round(transit * cdn.margin)
        records.append(
            BillingRecord(cdn.id, isp.id, charge(transit), BillingCycle.ISP_TO_CDN, sid, violated)
        )
        records.append(
            BillingRecord(
                corp.id,
                cdn.id,
                charge(transit + margin_share),
                BillingCycle.CDN_TO_CORP,
                sid,
                violated,
            )
        )
    elif topo.architecture is Architecture.WALLED_GARDEN:
        corp = topo.node_of_role(Role.CORPORATION)
        platform = topo.nodes[f"platform.{isp.id}"]
        transit = round(resv.reserved * minutes * isp.transit_price * 100)
        total = transit + round(transit * platform.margin)
        records.append(
            BillingRecord(corp.id, isp.id, charge(total), BillingCycle.ISP_TO_CORP, sid, violated)
        )
    else:  # GENERAL_CHAIN: each carrier bills the corporation for its segment
        corp = topo.node_of_role(Role.CORPORATION)
        carriers = []
        for link_id in resv.path:
            link = topo.links[link_id]
            for end in (link.a, link.b):
                node = topo.nodes.get(end)
                if (
                    node is not None
                    and node.role in (Role.LAST_MILE_ISP, Role.TRANSIT_ISP)
                    and node.id not in carriers
                ):
                    carriers.append(node.id)
        for carrier_id in carriers:
            carrier = topo.nodes[carrier_id]
            amount = round(resv.reserved * minutes * carrier.transit_price * 100)
            records.append(
                BillingRecord(
                    corp.id, carrier.id, charge(amount), BillingCycle.ISP_TO_CORP, sid, violated
                )
            )
    return records


def generate_workload(config: SimConfig, isp_ids: Sequence[str]) -> list[SessionRequest]:
    """Seeded arrival stream: exponential inter-arrivals quantized to
    integer minutes, media class and ISP drawn from the same stream.

    Only rng.random() is consumed, so the stream is identical for any
    architecture sharing the same ISP ids and workload parameters.
    """
    if config.arrival_rate <= 0:
        return []
    rng = random.Random(config.seed)
    mean_gap = 60.0 / config.arrival_rate  # minutes
    mix = list(config.media_mix)
    total_weight = sum(w for _, w in mix)
    requests = []
    clock = 0.0
    index = 0
    while True:
        clock += -math.log(1.0 - rng.random()) * mean_gap
        arrival = int(clock)
        if arrival >= config.horizon:
            break
        pick = rng.random() * total_weight
        media = mix[-1][0]
        for candidate, weight in mix:
            if pick < weight:
                media = candidate
                break
            pick -= weight
        if config.duration.kind is DurationKind.FIXED:
            duration = max(1, round(config.duration.minutes))
        else:
            duration = max(
                1, round(-math.log(1.0 - rng.random()) * config.duration.minutes)
            )
        isp = isp_ids[int(rng.random() * len(isp_ids)) % len(isp_ids)]
        requests.append(
            SessionRequest(
                id=f"s{index}",
                user=f"u{index}",
                isp=isp,
                media=media,
                demand=profile(media).high_mbps,
                arrival=arrival,
                duration=duration,
            )
        )
        index += 1
    return requests


_COMPLETION, _ARRIVAL = 0, 1  # completions drain capacity before same-minute arrivals


def run_detailed(config: SimConfig) -> SimResult:
    """Event loop: admit, reserve, verify SLA at completion, bill, release."""
    topo = build_topology(config.topology)
    state = NetworkState(topo)
    requests = generate_workload(config, topo.isp_ids)

    heap: list[tuple[int, int, int, object]] = []
    seq = 0
    for req in requests:
        heapq.heappush(heap, (req.arrival, _ARRIVAL, seq, req))
        seq += 1

    reservations: list[Reservation] = []
    billing: list[BillingRecord] = []
    active: dict[str, Reservation] = {}
    link_peak = {link_id: 0 for link_id in topo.links}
    link_area = {link_id: 0.0 for link_id in topo.links}  # kbps-minutes
    last_time = 0

    def advance_to(now: int) -> None:
        nonlocal last_time
        if now > last_time:
            span = now - last_time
            for link_id, kbps in state.reserved.items():
                link_area[link_id] += kbps * span
            last_time = now

    def refresh_peaks() -> None:
        # Utilization went up somewhere; fold into every active session.
        for resv in active.values():
            u = max(state.utilization(link_id) for link_id in resv.path)
            if u > resv.peak_utilization:
                resv.peak_utilization = u

    def emit(now: int, event: str, session_id: str) -> None:
        if config.trace is not None:
            utils = {
                link_id: round(state.utilization(link_id), 6)
                for link_id in sorted(topo.links)
            }
            config.trace(
                {"t": now, "event": event, "session": session_id, "util": utils}
            )

    offered = admitted = rejected = violated_count = forced_count = 0

    while heap:
        now, kind, _, payload = heapq.heappop(heap)
        advance_to(now)
        if kind == _COMPLETION:
            resv = payload  # type: ignore[assignment]
            verdict = verify_sla(
                resv, topo, config.sla, config.guaranteed, config.degradation
            )
            if verdict.passed:
                resv.state = ReservationState.COMPLETED
            else:
                resv.state = ReservationState.SLA_VIOLATED
                resv.violation = verdict.reason
                violated_count += 1
            if resv.forced:
                forced_count += 1
            state.release(resv.path, resv.reserved_kbps)
            billing.extend(bill(resv, topo, config.sla_rebate))
            del active[resv.request.id]
            emit(now, "violated" if not verdict.passed else "completed", resv.request.id)
        else:
            req = payload  # type: ignore[assignment]
            offered += 1
            decision = admit(req, topo, state, config.guaranteed, config.overprovision)
            path = topo.paths[req.isp]
            if decision.accepted:
                admitted += 1
                end = min(req.arrival + req.duration, config.horizon)
                resv = Reservation(
                    request=req,
                    path=path,
                    reserved_kbps=decision.effective_kbps,
                    state=ReservationState.ACTIVE,
                    end=end,
                    forced=end < req.arrival + req.duration,
                )
                state.reserve(path, decision.effective_kbps)
                for link_id in path:
                    if state.reserved[link_id] > link_peak[link_id]:
                        link_peak[link_id] = state.reserved[link_id]
                active[req.id] = resv
                reservations.append(resv)
                refresh_peaks()
                heapq.heappush(heap, (end, _COMPLETION, seq, resv))
                seq += 1
                emit(now, "admitted", req.id)
            else:
                rejected += 1
                reservations.append(
                    Reservation(
                        request=req,
                        path=path,
                        reserved_kbps=decision.effective_kbps,
                        state=ReservationState.REJECTED,
                    )
                )
                emit(now, "rejected", req.id)

    advance_to(config.horizon)

    revenue: dict[str, int] = {}
    expense: dict[str, int] = {}
    for record in billing:
        revenue[record.payee] = revenue.get(record.payee, 0) + record.amount
        expense[record.payer] = expense.get(record.payer, 0) + record.amount

    peaks = {
        link_id: link_peak[link_id] / topo.links[link_id].capacity_kbps
        for link_id in sorted(topo.links)
    }
    means = {
        link_id: link_area[link_id]
        / (config.horizon * topo.links[link_id].capacity_kbps)
        for link_id in sorted(topo.links)
    }
    completed = admitted - violated_count
    report = SimReport(
        offered=offered,
        admitted=admitted,
        rejected=rejected,
        completed=completed,
        sla_violated=violated_count,
        forced_completions=forced_count,
        acceptance_ratio=admitted / offered if offered else 1.0,
        sla_violation_rate=violated_count / admitted if admitted else 0.0,
        revenue=tuple(sorted(revenue.items())),
        expense=tuple(sorted(expense.items())),
        link_peak=tuple(peaks.items()),
        link_mean=tuple(means.items()),
        peak_utilization=max(peaks.values(), default=0.0),
        mean_utilization=(
            sum(means.values()) / len(means) if means else 0.0
        ),
    )
    return SimResult(report, reservations, billing, topo)


def run(config: SimConfig) -> SimReport:
    return run_detailed(config).report


@dataclass(frozen=True)
class ArchitectureRun:
    architecture: Architecture
    platform_count: int
    report: SimReport


@dataclass(frozen=True)
class ComparisonReport:
    runs: tuple[ArchitectureRun, ...]

    def to_csv(self) -> str:
        lines = ["architecture,metric,value"]
        for arch_run in self.runs:
            name = arch_run.architecture.value
            lines.append(f"{name},platform_count,{arch_run.platform_count}")
            for row in arch_run.report.to_csv().splitlines()[1:]:
                lines.append(f"{name},{row}")
        return "\n".join(lines) + "\n"


def compare_architectures(config: SimConfig) -> ComparisonReport:
    """Run the CDN and walled-garden architectures on the same seed.

    The arrival stream depends only on the workload parameters and the
    shared ISP ids, so both runs see identical offered sessions.
    """
    runs = []
    for arch in (Architecture.WALLED_GARDEN, Architecture.CDN_BASED):
        arch_config = replace(config, topology=replace(config.topology, architecture=arch))
        result = run_detailed(arch_config)
        runs.append(
            ArchitectureRun(arch, result.topology.platform_count, result.report)
        )
    return ComparisonReport(tuple(runs))
