"""Telecommuting economics and inter-provider QoS session simulation.

Four parts: the cost model (econ), the media/tariff catalog (media),
the session simulator (sim), and the scenario/report plumbing
(scenario, report, cli) that ties them to files and the command line.
"""

from .econ import (
    CommuteMode,
    CostParams,
    GainPoint,
    MonthlyCost,
    ResidenceOption,
    carbon_compare,
    commute_days,
    compute_ncf,
    feasible,
    feasible_set,
    gain_curve,
    gain_in_place,
    in_place_baseline,
    monthly_cost,
    optimize_settlement,
    relocation_baseline,
    telecom_budget,
    trip_cost,
)
from .media import (
    Bound,
    ConnectionProfile,
    MediaClass,
    MediaProfile,
    Pricing,
    ProximityTier,
    QosTier,
    SlaSpec,
    TariffEntry,
    feasible_media,
    monthly_media_cost,
    profile,
    required_access,
    tariff,
)
from .scenario import Scenario, ScenarioError, bundled_scenario_path, parse_scenario
from .sim import (
    Architecture,
    BillingRecord,
    Link,
    ProviderNode,
    Reservation,
    SessionRequest,
    SimConfig,
    SimReport,
    Topology,
    TopologySpec,
    build_topology,
    compare_architectures,
    run,
    run_detailed,
    verify_sla,
)

__version__ = "0.1.0"
