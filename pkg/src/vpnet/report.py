"""Whole-net analysis report: one pass building every analysis result."""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import (
    BoundReport,
    LinkTuple,
    Liveness,
    UNKNOWN,
    check_liveness,
    connectivity_set,
    find_deadlocks,
    link_tuple,
    net_bound,
)
from .export import config_to_json, gamma_to_json
from .model import VPNet
from .statespace import DEFAULT_NODE_BUDGET, build_ct, ct_to_cg


def _count_json(count):
    return count if isinstance(count, int) else "omega"


@dataclass
class AnalysisReport:
    """Every analysis over one net's coverability tree and graph.

    ``advisory`` is set when the tree contains omega: bounds stay exact as
    coverability statements, but deadlock, connectivity and link results
    are projections, and liveness is unknown.
    """

    net_name: str
    bounds: BoundReport
    deadlocks: list
    liveness: dict  # transition -> Liveness
    connectivity: list
    link: LinkTuple
    ct_stats: dict
    advisory: bool

    def to_json(self) -> dict:
        return {
            "net": self.net_name,
            "ctStats": dict(self.ct_stats),
            "bounds": {
                "perPlace": {p: _count_json(b) for p, b in self.bounds.per_place},
                "netBound": _count_json(self.bounds.net_bound),
                "safe": self.bounds.safe,
            },
            "deadlocks": [config_to_json(c) for c in self.deadlocks],
            "liveness": {
                t: {
                    "verdict": lv.verdict,
                    "witness": config_to_json(lv.witness) if lv.witness else None,
                }
                for t, lv in self.liveness.items()
            },
            "connectivity": [gamma_to_json(g) for g in self.connectivity],
            "linkTuple": {
                "C": gamma_to_json(self.link.c_set),
                "B": gamma_to_json(self.link.b_set),
                "A": gamma_to_json(self.link.a_set),
            },
            "advisory": self.advisory,
        }

    def render_lines(self) -> list:
        """Human-readable report, one string per line, deterministic."""
        stats = self.ct_stats
        lines = [
            f"net {self.net_name}",
            (
                f"coverability: {stats['nodes']} nodes, {stats['edges']} edges, "
                f"{stats['distinct_configs']} distinct configurations, "
                f"omega: {'yes' if stats['omega'] else 'no'}"
            ),
        ]
        if self.advisory:
            lines.append(
                "advisory: omega present - deadlock, connectivity and link "
                "results are projections; liveness is unknown"
            )
        bound = _count_json(self.bounds.net_bound)
        safety = "safe" if self.bounds.safe else "not safe"
        kind = "unbounded" if bound == "omega" else "bounded"
        lines.append(f"bounds: net bound {bound} ({kind}, {safety})")
        for place, b in self.bounds.per_place:
            lines.append(f"  {place}: {_count_json(b)}")
        lines.append(f"deadlocks: {len(self.deadlocks)}")
        for i, config in enumerate(self.deadlocks, 1):
            lines.append(f"  {i}. {config.render()}")
        lines.append("liveness:")
        for t, lv in self.liveness.items():
            if lv.verdict == "not-live" and lv.witness is not None:
                lines.append(f"  {t}: {lv.verdict} (witness {lv.witness.render()})")
            else:
                lines.append(f"  {t}: {lv.verdict}")
        lines.append(f"connectivity: {len(self.connectivity)} gammas")
        for gamma in self.connectivity:
            lines.append(f"  {gamma.render()}")
        lines.append("link tuple:")
        lines.append(f"  C: {self.link.c_set.render()}")
        lines.append(f"  B: {self.link.b_set.render()}")
        lines.append(f"  A: {self.link.a_set.render()}")
        return lines


def assemble_report(net: VPNet, node_budget: int = DEFAULT_NODE_BUDGET) -> AnalysisReport:
    """Build the coverability tree and graph and run every analysis.

    A budget overrun propagates as BudgetExceededError carrying the
    partial tree.
    """
    tree = build_ct(net, node_budget=node_budget)
    graph = ct_to_cg(tree)
    has_omega = tree.has_omega
    liveness = {}
    for t in net.transition_order():
        liveness[t] = (
            Liveness(UNKNOWN) if has_omega else check_liveness(graph, t)
        )
    return AnalysisReport(
        net_name=net.name,
        bounds=net_bound(tree),
        deadlocks=find_deadlocks(tree),
        liveness=liveness,
        connectivity=connectivity_set(tree),
        link=link_tuple(graph, net.gamma0),
        ct_stats=tree.stats(),
        advisory=has_omega,
    )
