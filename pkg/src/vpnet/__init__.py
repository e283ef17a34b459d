"""Variable Petri nets: model, execution semantics, state spaces, analyses.

The package is organized bottom-up:

* :mod:`vpnet.model` — immutable value types (names, omega multisets,
  guards, gamma, markings, configurations, nets) and validation.
* :mod:`vpnet.semantics` — bindings, enabledness, firing.
* :mod:`vpnet.statespace` — exact reachability, reachability tree,
  coverability tree/graph.
* :mod:`vpnet.analysis` — bounds, deadlocks, liveness, connectivity,
  link tuple.
* :mod:`vpnet.dsl` — the ``.vpn`` text format (parse/serialize).
* :mod:`vpnet.export` — JSON and Graphviz exports.
* :mod:`vpnet.report` / :mod:`vpnet.cli` — analysis reports and the
  ``vpn`` command.
* :mod:`vpnet.service` — the REST session service.
"""

from .analysis import (
    BoundReport,
    LinkTuple,
    Liveness,
    check_liveness,
    connectivity_set,
    find_deadlocks,
    gamma_diff,
    link_tuple,
    net_bound,
    place_bound,
)
from .dsl import Diagnostic, NetDocument, ParseError, parse, parse_net, serialize
from .export import export_dot, export_json
from .model import (
    ArcExpr,
    Configuration,
    EPSILON,
    Gamma,
    Marking,
    MSet,
    Name,
    NULL_GAMMA,
    OMEGA,
    RhoClause,
    TRUE,
    UnboundVariableError,
    Violation,
    VPNet,
    validate_net,
)
from .semantics import (
    FiringEvent,
    NotEnabledError,
    StepSequenceError,
    UnknownTransitionError,
    apply_rho,
    enabled_set,
    enumerate_bindings,
    eval_guard,
    fire,
    fire_sequence,
    replay,
    is_enabled,
)
from .report import AnalysisReport, assemble_report
from .statespace import (
    BudgetExceededError,
    CGraph,
    StateTree,
    build_ct,
    build_rt,
    ct_to_cg,
    exact_reachability,
)

__version__ = "0.1.0"

__all__ = [
    "ArcExpr",
    "AnalysisReport",
    "BoundReport",
    "BudgetExceededError",
    "CGraph",
    "Configuration",
    "Diagnostic",
    "EPSILON",
    "FiringEvent",
    "Gamma",
    "LinkTuple",
    "Liveness",
    "Marking",
    "MSet",
    "Name",
    "NetDocument",
    "NotEnabledError",
    "NULL_GAMMA",
    "OMEGA",
    "ParseError",
    "RhoClause",
    "StateTree",
    "StepSequenceError",
    "TRUE",
    "UnboundVariableError",
    "UnknownTransitionError",
    "Violation",
    "VPNet",
    "apply_rho",
    "assemble_report",
    "build_ct",
    "build_rt",
    "check_liveness",
    "connectivity_set",
    "ct_to_cg",
    "enabled_set",
    "enumerate_bindings",
    "eval_guard",
    "exact_reachability",
    "export_dot",
    "export_json",
    "find_deadlocks",
    "fire",
    "fire_sequence",
    "replay",
    "gamma_diff",
    "is_enabled",
    "link_tuple",
    "net_bound",
    "parse",
    "parse_net",
    "place_bound",
    "serialize",
    "validate_net",
]
