"""State-space construction: reachability, exact trees and coverability.

Three views of a net's behavior:

* :func:`exact_reachability` — breadth-first enumeration of every reachable
  configuration, with no abstraction.  The oracle for finite state spaces;
  it simply exceeds its budget on unbounded nets.
* :func:`build_rt` — the exact reachability tree (one node per firing
  sequence), truncated explicitly at a depth limit since it is infinite
  for any net with a cycle or unbounded growth.
* :func:`build_ct` — the coverability tree.  While expanding, a new node
  is compared against its root-path ancestors: equality makes it a
  duplicate leaf; a strictly covered ancestor with the same place set and
  the same gamma pumps every strictly grown token count to omega.  The
  result is always finite.

:func:`ct_to_cg` merges coverability-tree nodes with equal configurations
into the coverability graph used by the analyses.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .model import Configuration, VPNet, binding_key
from .semantics import enabled_set, fire

#: Default ceiling on coverability/reachability construction sizes.
DEFAULT_NODE_BUDGET = 100_000
#: Default depth limit for the exact reachability tree.
DEFAULT_RT_DEPTH = 1_000

KIND_INTERIOR = "interior"
KIND_TERMINAL = "terminal"
KIND_DUPLICATE = "duplicate"
KIND_TRUNCATED = "truncated"


class BudgetExceededError(Exception):
    """A construction hit its node/configuration budget.

    ``partial`` carries whatever had been built when the budget ran out.
    """

    def __init__(self, what: str, budget: int, partial=None):
        self.what = what
        self.budget = budget
        self.partial = partial
        super().__init__(f"{what} exceeded the budget of {budget} nodes")


@dataclass(frozen=True)
class TreeNode:
    id: int
    config: Configuration
    parent: object  # int or None for the root
    depth: int
    kind: str


@dataclass(frozen=True)
class TreeEdge:
    source: int
    target: int
    transition: str
    binding: tuple  # sorted (variable, constant) pairs


@dataclass
class StateTree:
    """A rooted, labeled tree of configurations (reachability or coverability)."""

    kind: str  # "rt" or "ct"
    root: int = 0
    nodes: list = field(default_factory=list)
    edges: list = field(default_factory=list)

    @property
    def has_omega(self) -> bool:
        return any(n.config.marking.has_omega for n in self.nodes)

    def node(self, node_id: int) -> TreeNode:
        return self.nodes[node_id]

    def nodes_of_kind(self, kind: str) -> list:
        return [n for n in self.nodes if n.kind == kind]

    def distinct_configs(self) -> list:
        """Distinct configurations in first-visit order."""
        seen = {}
        for n in self.nodes:
            seen.setdefault(n.config, None)
        return list(seen.keys())

    def stats(self) -> dict:
        counts = {KIND_INTERIOR: 0, KIND_TERMINAL: 0, KIND_DUPLICATE: 0, KIND_TRUNCATED: 0}
        for n in self.nodes:
            counts[n.kind] += 1
        return {
            "nodes": len(self.nodes),
            "edges": len(self.edges),
            "distinct_configs": len(self.distinct_configs()),
            "terminal": counts[KIND_TERMINAL],
            "duplicate": counts[KIND_DUPLICATE],
            "truncated": counts[KIND_TRUNCATED],
            "omega": self.has_omega,
        }


@dataclass(frozen=True)
class CGNode:
    id: int
    config: Configuration
    kind: str  # terminal or interior


@dataclass(frozen=True)
class CGEdge:
    source: int
    target: int
    transition: str
    binding: tuple


@dataclass
class CGraph:
    """The coverability graph: coverability-tree nodes merged by configuration."""

    nodes: list = field(default_factory=list)
    edges: list = field(default_factory=list)
    has_omega: bool = False
    root: int = 0

    def node(self, node_id: int) -> CGNode:
        return self.nodes[node_id]


def exact_reachability(net: VPNet, budget: int = DEFAULT_NODE_BUDGET) -> list:
    """Every reachable configuration, breadth-first, without abstraction.

    Returns configurations in deterministic discovery order.  Raises
    :class:`BudgetExceededError` (with the partial list) once more than
    ``budget`` configurations have been found — in particular on any net
    with an unbounded state space.
    """
    start = net.initial_configuration()
    seen = {start: None}
    order = [start]
    queue = deque([start])
    while queue:
        config = queue.popleft()
        for transition, binding in enabled_set(net, config):
            succ, _event = fire(net, config, transition, binding)
            if succ in seen:
                continue
            if len(order) >= budget:
                raise BudgetExceededError("exact reachability", budget, order)
            seen[succ] = None
            order.append(succ)
            queue.append(succ)
    return order


def build_rt(
    net: VPNet,
    depth_limit: int = DEFAULT_RT_DEPTH,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> StateTree:
    """The exact reachability tree, truncated at ``depth_limit``.

    Every node is one firing sequence from the root; configurations repeat
    freely.  Frontier nodes cut off by the depth limit get kind
    "truncated", so truncation is always visible in the result.
    """
    tree = StateTree(kind="rt")
    stack = [(net.initial_configuration(), None, None, 0)]
    while stack:
        config, parent, via, depth = stack.pop()
        if len(tree.nodes) >= node_budget:
            raise BudgetExceededError("reachability tree", node_budget, tree)
        nid = len(tree.nodes)
        steps = enabled_set(net, config)
        if not steps:
            kind = KIND_TERMINAL
        elif depth >= depth_limit:
            kind = KIND_TRUNCATED
        else:
            kind = KIND_INTERIOR
        tree.nodes.append(TreeNode(nid, config, parent, depth, kind))
        if via is not None:
            transition, binding = via
            tree.edges.append(TreeEdge(parent, nid, transition, binding_key(binding)))
        if kind == KIND_INTERIOR:
            for transition, binding in reversed(steps):
                succ, _event = fire(net, config, transition, binding)
                stack.append((succ, nid, (transition, binding), depth + 1))
    return tree


def _accelerate(config: Configuration, ancestors: list) -> Configuration:
    """Pump strictly grown token counts to omega against covered ancestors.

    An ancestor qualifies when it has the same place set, the same gamma,
    and a marking strictly below the candidate's.  Applied to fixpoint: an
    omega introduced for one ancestor may let the candidate cover another.
    """
    marking = config.marking
    while True:
        grew = False
        current = Configuration(marking, config.places, config.gamma)
        for anc in ancestors:
            if anc.places != current.places or anc.gamma != current.gamma:
                continue
            if anc.marking == marking:
                continue
            if not all(
                anc.marking[p].leq(marking[p]) for p in marking.places()
            ):
                continue
            changes = {}
            for place in marking.places():
                cur = marking[place]
                below = anc.marking[place]
                for token, count in cur.items():
                    if isinstance(count, int) and below.count(token) < count:
                        cur = cur.with_omega(token)
                if cur is not marking[place]:
                    changes[place] = cur
            if changes:
                marking = marking.updated(changes)
                grew = True
        if not grew:
            return Configuration(marking, config.places, config.gamma)


def build_ct(net: VPNet, node_budget: int = DEFAULT_NODE_BUDGET) -> StateTree:
    """The coverability tree with omega acceleration.

    Nodes are expanded depth-first in canonical step order, so ids and
    edge order are deterministic.  A node equal to a root-path ancestor
    becomes a duplicate leaf; a node with no enabled steps is terminal.
    Raises :class:`BudgetExceededError` carrying the partial tree if the
    net needs more than ``node_budget`` nodes.
    """
    tree = StateTree(kind="ct")
    path: list = []  # configurations on the current root path
    POP = object()
    stack = [(net.initial_configuration(), None, None)]
    while stack:
        item = stack.pop()
        if item is POP:
            path.pop()
            continue
        raw, parent, via = item
        if len(tree.nodes) >= node_budget:
            raise BudgetExceededError("coverability tree", node_budget, tree)
        config = _accelerate(raw, path)
        nid = len(tree.nodes)
        if any(config == anc for anc in path):
            kind = KIND_DUPLICATE
            steps = []
        else:
            steps = enabled_set(net, config)
            kind = KIND_TERMINAL if not steps else KIND_INTERIOR
        tree.nodes.append(TreeNode(nid, config, parent, len(path), kind))
        if via is not None:
            transition, binding = via
            tree.edges.append(TreeEdge(parent, nid, transition, binding_key(binding)))
        if kind == KIND_INTERIOR:
            stack.append(POP)
            path.append(config)
            for transition, binding in reversed(steps):
                succ, _event = fire(net, config, transition, binding)
                stack.append((succ, nid, (transition, binding)))
    return tree


def ct_to_cg(tree: StateTree) -> CGraph:
    """Merge coverability-tree nodes with equal configurations.

    Node ids follow first appearance in the tree; parallel edges that
    agree on source, target, transition and binding are kept once.
    """
    graph = CGraph(has_omega=tree.has_omega)
    rep: dict[Configuration, int] = {}
    terminal_configs = {
        n.config for n in tree.nodes if n.kind == KIND_TERMINAL
    }
    for node in tree.nodes:
        if node.config not in rep:
            new_id = len(graph.nodes)
            rep[node.config] = new_id
            kind = KIND_TERMINAL if node.config in terminal_configs else KIND_INTERIOR
            graph.nodes.append(CGNode(new_id, node.config, kind))
    by_id = {n.id: n.config for n in tree.nodes}
    seen_edges = set()
    for edge in tree.edges:
        key = (
            rep[by_id[edge.source]],
            rep[by_id[edge.target]],
            edge.transition,
            edge.binding,
        )
        if key in seen_edges:
            continue
        seen_edges.add(key)
        graph.edges.append(CGEdge(*key))
    if tree.nodes:
        graph.root = rep[tree.nodes[tree.root].config]
    return graph
