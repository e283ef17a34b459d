"""JSON and DOT exports: pinned shapes, canonical ordering, determinism."""

import json

import pytest

from vpnet import (
    build_ct,
    build_rt,
    ct_to_cg,
    fire,
    parse_net,
)
from vpnet.export import (
    binding_to_json,
    config_to_json,
    dumps,
    event_to_json,
    export_dot,
    export_json,
    gamma_to_json,
    graph_to_dot,
    graph_to_json,
    mset_to_json,
    net_to_dot,
    net_to_json,
    steps_to_json,
    tree_to_dot,
    tree_to_json,
)
from vpnet.model import Gamma, MSet, NULL_GAMMA, OMEGA


def dot_lines(text, needle):
    return [line for line in text.splitlines() if needle in line]


# ---------------------------------------------------------------- json


class TestJsonEncoding:
    def test_dumps_is_canonical(self):
        assert dumps({"b": 1, "a": 2}) == '{\n  "a": 2,\n  "b": 1\n}\n'

    def test_mset_repeats_tokens_per_count(self):
        assert mset_to_json(MSet({"f1": 2, ("a", "b"): 1})) == [
            ["a", "b"],
            ["f1"],
            ["f1"],
        ]

    def test_mset_encodes_omega_inline(self):
        got = mset_to_json(MSet({"eps": OMEGA, "a": 1}))
        assert got == [["a"], {"token": ["eps"], "count": "omega"}]

    def test_gamma(self):
        assert gamma_to_json(NULL_GAMMA) == {}
        assert gamma_to_json(Gamma({"I": {"I_AB"}})) == {"I": ["I_AB"]}
        assert gamma_to_json(Gamma({"R": {"R2", "R1"}})) == {"R": ["R1", "R2"]}

    def test_reference_start_configuration(self, ne2):
        got = config_to_json(ne2.initial_configuration())
        assert got == {
            "marking": {
                "De": [],
                "I_AB": [],
                "In": [["I_AB"]],
                "St1": [["f1"], ["f2"]],
                "St2": [],
            },
            "places": ["De", "I_AB", "In", "St1", "St2"],
            "gamma": {},
        }

    def test_binding(self):
        assert binding_to_json({"I": "I_AB"}) == {"I": "I_AB"}
        assert binding_to_json((("D", "f1"), ("I", "I_AB"))) == {
            "D": "f1",
            "I": "I_AB",
        }

    def test_event(self, ne2):
        _after, event = fire(ne2, ne2.initial_configuration(), "t2", {"I": "I_AB"})
        assert event_to_json(event) == {
            "transition": "t2",
            "binding": {"I": "I_AB"},
            "consumed": {"In": [["I_AB"]]},
            "produced": {"De": [["I_AB"]]},
            "newPlaces": [],
            "gammaOps": [{"variable": "I", "constant": "I_AB", "direction": "+"}],
            "solidArcs": [{"from": "t2", "to": "I_AB"}],
        }

    def test_steps(self):
        got = steps_to_json([("t1", {"D": "f1"}), ("t5", {})])
        assert got == [
            {"transition": "t1", "binding": {"D": "f1"}},
            {"transition": "t5", "binding": {}},
        ]

    def test_tree_shape(self, dispatch):
        tree = build_ct(dispatch)
        payload = tree_to_json(tree)
        assert set(payload) == {"nodes", "edges"}
        assert payload["nodes"][0]["id"] == 0
        assert set(payload["nodes"][0]) == {"id", "config", "kind"}
        edge = payload["edges"][0]
        assert set(edge) == {"from", "to", "transition", "binding"}
        assert edge["from"] == 0
        assert edge["binding"] == {"D": "D1", "R": "R1"}

    def test_graph_shape(self, dispatch):
        payload = graph_to_json(ct_to_cg(build_ct(dispatch)))
        assert len(payload["nodes"]) == 4
        assert len(payload["edges"]) == 4

    def test_net_shape(self, ne2):
        payload = net_to_json(ne2)
        assert payload["name"] == "Ne2"
        assert payload["variables"] == ["D", "I"]
        assert payload["places"] == ["De", "I_AB", "In", "St1", "St2"]
        assert [t["name"] for t in payload["transitions"]] == ["t1", "t2", "t3", "t4"]
        t2 = payload["transitions"][1]
        assert t2["guard"] == "true"
        assert t2["link"] == [{"condition": "true", "variable": "I", "direction": "+"}]
        virtual = {(a["from"], a["to"]) for a in payload["arcs"] if a["virtual"]}
        assert virtual == {("I", "t3"), ("t2", "I"), ("t4", "I")}
        empty = [a for a in payload["arcs"] if a["weight"] == "empty"]
        assert {(a["from"], a["to"]) for a in empty} == {("t2", "I"), ("t4", "I")}
        assert payload["marking"] == {"In": [["I_AB"]], "St1": [["f1"], ["f2"]]}
        assert payload["gamma"] == {}

    def test_export_json_dispatch(self, ne2):
        tree = build_ct(ne2)
        for obj in (ne2, ne2.initial_configuration(), tree, ct_to_cg(tree)):
            json.loads(export_json(obj))
        with pytest.raises(TypeError):
            export_json(42)


# ---------------------------------------------------------------- dot


class TestDot:
    def test_reference_net_element_counts(self, ne2):
        dot = net_to_dot(ne2)
        assert len(dot_lines(dot, "shape=ellipse")) == 7  # 5 places + 2 variables
        assert len(dot_lines(dot, "style=dashed, label")) == 2  # the variables
        assert len(dot_lines(dot, "shape=box")) == 4

    def test_initial_marking_appears_on_places(self, ne2):
        dot = net_to_dot(ne2)
        assert '"St1" [shape=ellipse, label="St1\\n{f1, f2}"];' in dot
        assert '"In" [shape=ellipse, label="In\\n{I_AB}"];' in dot

    def test_arcs_touching_variables_are_dashed(self, ne2):
        dot = net_to_dot(ne2)
        assert '"t2" -> "I" [label="empty", style=dashed];' in dot
        assert '"St1" -> "t1" [label="D"];' in dot

    def test_guard_and_link_labels(self, dispatch):
        dot = net_to_dot(dispatch)
        assert "[R == R1 || R == R2]" in dot
        assert "link: +R" in dot

    def test_root_only_tree_has_one_node(self):
        net = parse_net("net X\nconst p, a\nplace p\nmarking p { a }\n")
        dot = tree_to_dot(build_ct(net))
        assert len(dot_lines(dot, "shape=ellipse")) == 1
        assert len(dot_lines(dot, "->")) == 0

    def test_reference_graph_styles_four_terminals(self, ne2):
        dot = graph_to_dot(ct_to_cg(build_ct(ne2)))
        assert len(dot_lines(dot, "peripheries=2")) == 4

    def test_duplicate_nodes_are_dashed(self, grower):
        dot = tree_to_dot(build_ct(grower))
        assert len(dot_lines(dot, "style=dashed")) == 1

    def test_truncated_nodes_are_dotted(self, ne2):
        dot = tree_to_dot(build_rt(ne2, depth_limit=1))
        assert len(dot_lines(dot, "style=dotted")) == 3

    def test_edges_are_labeled_with_steps(self, ne2):
        dot = tree_to_dot(build_ct(ne2))
        assert 'label="t2 [I=I_AB]"' in dot

    def test_node_labels_show_marking_and_gamma(self, grower):
        dot = tree_to_dot(build_ct(grower))
        assert "{p{omega*eps}}" in dot
        assert "gamma: NULL" in dot

    def test_export_dot_dispatch(self, ne2):
        tree = build_ct(ne2)
        for obj in (ne2, tree, ct_to_cg(tree)):
            assert export_dot(obj).startswith("digraph")
        with pytest.raises(TypeError):
            export_dot("nope")


# ---------------------------------------------------------------- determinism


class TestDeterminism:
    def test_repeated_exports_are_identical(self, ne3):
        tree = build_ct(ne3)
        assert export_json(tree) == export_json(build_ct(ne3))
        assert export_dot(ne3) == export_dot(ne3)
        assert export_json(ct_to_cg(tree)) == export_json(ct_to_cg(build_ct(ne3)))

    def test_json_iteration_order_is_sorted_not_insertion(self, ne2):
        # a marking built in a scrambled order must serialize identically
        config = ne2.initial_configuration()
        text = export_json(config)
        keys = list(json.loads(text)["marking"])
        assert keys == sorted(keys)
