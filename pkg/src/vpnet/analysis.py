"""Analyses over the coverability tree and graph.

Boundedness reads token-count maxima off the tree (omega means unbounded);
deadlocks are the distinct terminal configurations; liveness of a
transition asks whether from every node of the coverability graph some
node enabling it stays reachable; the connectivity set collects every
gamma the net can exhibit; and the link tuple summarizes, per variable,
which place links can be created (C), can be broken (B), and are available
overall (A) against the initial gamma.

On trees containing omega the marking-dependent verdicts lose exactness:
deadlock and connectivity results are advisory projections, and liveness
returns "unknown".
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import Configuration, Gamma, count_sort_key
from .statespace import CGraph, KIND_TERMINAL, StateTree

LIVE = "live"
NOT_LIVE = "not-live"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class BoundReport:
    """Per-place and whole-net token bounds; a bound may be omega."""

    per_place: tuple  # sorted (place, bound) pairs over every reachable place
    net_bound: object  # int or OMEGA
    safe: bool

    def bound(self, place: str):
        for p, b in self.per_place:
            if p == place:
                return b
        return 0


@dataclass(frozen=True)
class Liveness:
    verdict: str  # live | not-live | unknown
    witness: object = None  # for not-live: a configuration that loses t forever


@dataclass(frozen=True)
class LinkTuple:
    """Per-variable creatable (C), breakable (B) and available (A) links."""

    c_set: Gamma
    b_set: Gamma
    a_set: Gamma


def place_bound(tree: StateTree, place: str):
    """Maximum token count of ``place`` over the tree; 0 when never present."""
    best = 0
    for node in tree.nodes:
        marking = node.config.marking
        if place in marking:
            total = marking[place].total()
            if count_sort_key(total) > count_sort_key(best):
                best = total
    return best


def net_bound(tree: StateTree) -> BoundReport:
    """Bounds for every place that ever exists, and the net-wide maximum."""
    bounds: dict[str, object] = {}
    for node in tree.nodes:
        for place, mset in node.config.marking.items():
            total = mset.total()
            cur = bounds.get(place, 0)
            if place not in bounds or count_sort_key(total) > count_sort_key(cur):
                bounds[place] = total
    per_place = tuple(sorted(bounds.items()))
    net_max = 0
    for _place, bound in per_place:
        if count_sort_key(bound) > count_sort_key(net_max):
            net_max = bound
    return BoundReport(per_place=per_place, net_bound=net_max, safe=net_max <= 1)


def find_deadlocks(tree: StateTree) -> list:
    """Distinct terminal configurations, canonically ordered.

    Exact when the tree is omega-free; otherwise an advisory projection
    (an omega marking may mask real deadlocks).
    """
    distinct = {n.config for n in tree.nodes if n.kind == KIND_TERMINAL}
    return sorted(distinct, key=Configuration.sort_key)


def check_liveness(graph: CGraph, transition: str) -> Liveness:
    """Liveness of one transition over the coverability graph.

    Live means: from every node, some node with an outgoing ``transition``
    edge remains reachable.  With omega in the graph the verdict is
    "unknown".  A not-live verdict carries the canonically smallest
    configuration from which the transition can never fire again.
    """
    if graph.has_omega:
        return Liveness(UNKNOWN)
    enablers = {e.source for e in graph.edges if e.transition == transition}
    forward: dict[int, set] = {n.id: set() for n in graph.nodes}
    for e in graph.edges:
        forward[e.source].add(e.target)
    # nodes that can reach an enabler (backward closure over forward edges)
    can = set(enablers)
    changed = True
    while changed:
        changed = False
        for node in graph.nodes:
            if node.id in can:
                continue
            if forward[node.id] & can:
                can.add(node.id)
                changed = True
    dead = [n.config for n in graph.nodes if n.id not in can]
    if not dead:
        return Liveness(LIVE)
    return Liveness(NOT_LIVE, witness=min(dead, key=Configuration.sort_key))


def connectivity_set(tree: StateTree) -> list:
    """Every gamma the net exhibits in the tree, canonically ordered."""
    distinct = {n.config.gamma for n in tree.nodes}
    return sorted(distinct, key=Gamma.sort_key)


def gamma_diff(left: Gamma, right: Gamma) -> Gamma:
    """Per-variable set difference of two constraint functions."""
    return left.diff(right)


def link_tuple(graph: CGraph, gamma0: Gamma) -> LinkTuple:
    """The (C, B, A) link summary over the coverability graph's edges.

    C collects links created along some edge, B links broken along some
    edge, and A = (gamma0 union C) minus B — the links available at some
    point and never taken down.
    """
    by_id = {n.id: n.config.gamma for n in graph.nodes}
    c_set = Gamma()
    b_set = Gamma()
    for edge in graph.edges:
        source = by_id[edge.source]
        target = by_id[edge.target]
        c_set = c_set.union(target.diff(source))
        b_set = b_set.union(source.diff(target))
    a_set = gamma0.union(c_set).diff(b_set)
    return LinkTuple(c_set=c_set, b_set=b_set, a_set=a_set)
