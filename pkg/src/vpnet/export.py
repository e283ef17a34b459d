"""Deterministic JSON and Graphviz exports.

JSON shapes (stable key order, omega spelled ``"omega"``):

* configuration — ``{"marking": {place: [token array..., or
  {"token": [...], "count": "omega"}]}, "places": [...], "gamma":
  {variable: [constants...]}}``; finite counts repeat the token array,
  entries are sorted, the NULL gamma is ``{}``.
* tree/graph — ``{"nodes": [{"id", "config", "kind"}], "edges":
  [{"from", "to", "transition", "binding"}]}``.

DOT renderings draw places as ellipses, declared variables (the virtual
places) as dashed ellipses, transitions as boxes, and arcs touching a
variable as dashed edges.  Tree/graph nodes show marking and gamma;
terminal nodes get a double outline, duplicate leaves a dashed one.
"""

from __future__ import annotations

import json

from .model import (
    Configuration,
    Gamma,
    MSet,
    VPNet,
    render_step,
    render_token,
)
from .semantics import FiringEvent
from .statespace import CGraph, StateTree


def dumps(payload) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def mset_to_json(mset: MSet) -> list:
    out = []
    for token, count in mset.items():
        if isinstance(count, int):
            out.extend([list(token)] * count)
        else:
            out.append({"token": list(token), "count": "omega"})
    return out


def gamma_to_json(gamma: Gamma) -> dict:
    return {var: list(consts) for var, consts in gamma.items()}


def config_to_json(config: Configuration) -> dict:
    return {
        "marking": {p: mset_to_json(ms) for p, ms in config.marking.items()},
        "places": sorted(config.places),
        "gamma": gamma_to_json(config.gamma),
    }


def binding_to_json(binding) -> dict:
    if isinstance(binding, dict):
        return dict(sorted(binding.items()))
    return dict(binding)


def event_to_json(event: FiringEvent) -> dict:
    return {
        "transition": event.transition,
        "binding": binding_to_json(event.binding),
        "consumed": {p: mset_to_json(ms) for p, ms in event.consumed},
        "produced": {p: mset_to_json(ms) for p, ms in event.produced},
        "newPlaces": list(event.new_places),
        "gammaOps": [
            {"variable": var, "constant": const, "direction": direction}
            for var, const, direction in event.gamma_ops
        ],
        "solidArcs": [
            {"from": src, "to": dst} for src, dst in sorted(event.solid_arcs)
        ],
    }


def steps_to_json(steps) -> list:
    return [
        {"transition": t, "binding": binding_to_json(b)} for t, b in steps
    ]


def tree_to_json(tree: StateTree) -> dict:
    return {
        "nodes": [
            {"id": n.id, "config": config_to_json(n.config), "kind": n.kind}
            for n in tree.nodes
        ],
        "edges": [
            {
                "from": e.source,
                "to": e.target,
                "transition": e.transition,
                "binding": binding_to_json(e.binding),
            }
            for e in tree.edges
        ],
    }


def graph_to_json(graph: CGraph) -> dict:
    return {
        "nodes": [
            {"id": n.id, "config": config_to_json(n.config), "kind": n.kind}
            for n in graph.nodes
        ],
        "edges": [
            {
                "from": e.source,
                "to": e.target,
                "transition": e.transition,
                "binding": binding_to_json(e.binding),
            }
            for e in graph.edges
        ],
    }


def net_to_json(net: VPNet) -> dict:
    """Structural view for rendering: nodes, arcs, virtual flags, initials."""
    return {
        "name": net.name,
        "constants": {c: a for c, a in net.constants.items()},
        "variables": sorted(net.variables),
        "places": sorted(net.places),
        "transitions": [
            {
                "name": t,
                "guard": net.guard(t).render(),
                "link": [
                    {
                        "condition": clause.condition.render(),
                        "variable": var,
                        "direction": direction,
                    }
                    for clause in net.link_clauses(t)
                    for var, direction in clause.ops
                ],
            }
            for t in net.transition_order()
        ],
        "arcs": [
            {
                "from": src,
                "to": dst,
                "weight": net.weights.get((src, dst)).render(),
                "virtual": src in net.variables or dst in net.variables,
            }
            for src, dst in sorted(net.arcs)
        ],
        "gamma": gamma_to_json(net.gamma0),
        "marking": {p: mset_to_json(ms) for p, ms in net.m0.nonempty_items()},
    }


# -- DOT ------------------------------------------------------------------

def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _config_label(config: Configuration) -> str:
    marking = config.marking.render()
    gamma = config.gamma.render()
    return f"{marking}\\ngamma: {gamma}"


def net_to_dot(net: VPNet) -> str:
    """The net structure: places, dashed virtual places, transition boxes."""
    lines = [f"digraph {_quote(net.name)} {{", "  rankdir=LR;"]
    for place in sorted(net.places):
        label = place
        tokens = net.m0.get(place)
        if tokens:
            label += f"\\n{tokens.render()}"
        lines.append(f"  {_quote(place)} [shape=ellipse, label={_quote_label(label)}];")
    for var in sorted(net.variables):
        lines.append(
            f"  {_quote(var)} [shape=ellipse, style=dashed, label={_quote_label(var)}];"
        )
    for t in net.transition_order():
        label = t
        guard = net.guard(t)
        if guard.render() != "true":
            label += f"\\n[{guard.render()}]"
        clauses = net.link_clauses(t)
        if clauses:
            ops = ", ".join(
                f"{direction}{var}"
                for clause in clauses
                for var, direction in clause.ops
            )
            label += f"\\nlink: {ops}"
        lines.append(f"  {_quote(t)} [shape=box, label={_quote_label(label)}];")
    for src, dst in sorted(net.arcs):
        weight = net.weights.get((src, dst)).render()
        style = ", style=dashed" if src in net.variables or dst in net.variables else ""
        lines.append(
            f"  {_quote(src)} -> {_quote(dst)} [label={_quote_label(weight)}{style}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _quote_label(label: str) -> str:
    # label text may already contain \n escapes; only quote the quotes
    return '"' + label.replace('"', '\\"') + '"'


def _nodes_edges_to_dot(name: str, nodes, edges, node_kind) -> str:
    lines = [f"digraph {_quote(name)} {{", "  rankdir=TB;"]
    for node in nodes:
        attrs = [f"label={_quote_label(f'{node.id}: ' + _config_label(node.config))}", "shape=ellipse"]
        kind = node_kind(node)
        if kind == "terminal":
            attrs.append("peripheries=2")
        elif kind == "duplicate":
            attrs.append("style=dashed")
        elif kind == "truncated":
            attrs.append("style=dotted")
        lines.append(f"  n{node.id} [{', '.join(attrs)}];")
    for edge in edges:
        label = render_step(edge.transition, dict(edge.binding))
        lines.append(f"  n{edge.source} -> n{edge.target} [label={_quote_label(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_to_dot(tree: StateTree) -> str:
    return _nodes_edges_to_dot(tree.kind, tree.nodes, tree.edges, lambda n: n.kind)


def graph_to_dot(graph: CGraph) -> str:
    return _nodes_edges_to_dot("cg", graph.nodes, graph.edges, lambda n: n.kind)


def export_dot(obj) -> str:
    """DOT text for a net, a state tree or a coverability graph."""
    if isinstance(obj, VPNet):
        return net_to_dot(obj)
    if isinstance(obj, StateTree):
        return tree_to_dot(obj)
    if isinstance(obj, CGraph):
        return graph_to_dot(obj)
    raise TypeError(f"cannot render {type(obj).__name__} as DOT")


def export_json(obj) -> str:
    """Canonical JSON text for a configuration, net, state tree or graph."""
    if isinstance(obj, Configuration):
        return dumps(config_to_json(obj))
    if isinstance(obj, VPNet):
        return dumps(net_to_json(obj))
    if isinstance(obj, StateTree):
        return dumps(tree_to_json(obj))
    if isinstance(obj, CGraph):
        return dumps(graph_to_json(obj))
    raise TypeError(f"cannot render {type(obj).__name__} as JSON")
