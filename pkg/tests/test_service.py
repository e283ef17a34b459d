"""REST session service tests.

Exercised in-process through FastAPI's TestClient: session lifecycle,
firing, undo, error statuses, idle expiry, and the invariant that the
event history replays to the current configuration.
"""

import time

import pytest
from fastapi.testclient import TestClient

from vpnet.dsl import parse
from vpnet.export import config_to_json, net_to_json
from vpnet.semantics import fire
from vpnet.service import SESSION_TTL_SECONDS, create_app

from conftest import fixture_text

PI0_JSON = {
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

PI0_ENABLED = [
    {"transition": "t1", "binding": {"D": "f1"}},
    {"transition": "t1", "binding": {"D": "f2"}},
    {"transition": "t2", "binding": {"I": "I_AB"}},
]


@pytest.fixture()
def client():
    with TestClient(create_app()) as c:
        yield c


@pytest.fixture()
def ne2_source():
    return fixture_text("ne2.vpn")


def make_session(client, source) -> str:
    resp = client.post("/api/sessions", json={"source": source})
    assert resp.status_code == 201
    return resp.json()["id"]


class TestCreate:
    def test_reference_net_full_payload(self, client, ne2_source):
        resp = client.post("/api/sessions", json={"source": ne2_source})
        assert resp.status_code == 201
        body = resp.json()
        assert set(body) == {"id", "config", "enabled"}
        assert body["config"] == PI0_JSON
        assert body["enabled"] == PI0_ENABLED

    def test_ids_are_distinct_url_safe_tokens(self, client, ne2_source):
        ids = {make_session(client, ne2_source) for _ in range(5)}
        assert len(ids) == 5
        safe = set(
            "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789-_"
        )
        for sid in ids:
            assert len(sid) >= 16
            assert set(sid) <= safe

    def test_invalid_source_reports_diagnostics(self, client):
        source = "net Bad\nconst a, a, p\nplace p\ntrans t\narc p -> t : a\n"
        resp = client.post("/api/sessions", json={"source": source})
        assert resp.status_code == 400
        body = resp.json()
        assert body["error"] == "invalid source"
        assert body["diagnostics"] == [
            {
                "line": 2,
                "column": 10,
                "length": 1,
                "message": "duplicate constant declaration: a",
            }
        ]

    def test_missing_source_field_is_rejected(self, client):
        resp = client.post("/api/sessions", json={})
        assert resp.status_code == 422


class TestRead:
    def test_get_session_view(self, client, ne2_source):
        sid = make_session(client, ne2_source)
        resp = client.get(f"/api/sessions/{sid}")
        assert resp.status_code == 200
        body = resp.json()
        assert set(body) == {"config", "enabled", "historyLength"}
        assert body["config"] == PI0_JSON
        assert body["enabled"] == PI0_ENABLED
        assert body["historyLength"] == 1

    def test_get_net_matches_structural_export(self, client, ne2_source):
        sid = make_session(client, ne2_source)
        resp = client.get(f"/api/sessions/{sid}/net")
        assert resp.status_code == 200
        assert resp.json() == net_to_json(parse(ne2_source).net)

    def test_unknown_session_is_404(self, client):
        for method, path in [
            ("GET", "/api/sessions/nope"),
            ("GET", "/api/sessions/nope/net"),
            ("POST", "/api/sessions/nope/undo"),
            ("DELETE", "/api/sessions/nope"),
        ]:
            resp = client.request(method, path)
            assert resp.status_code == 404
            assert resp.json() == {"error": "unknown session"}
        resp = client.post(
            "/api/sessions/nope/fire", json={"transition": "t1", "binding": {}}
        )
        assert resp.status_code == 404
        assert resp.json() == {"error": "unknown session"}


class TestFire:
    def test_fire_updates_config_and_reports_event(self, client, ne2_source):
        sid = make_session(client, ne2_source)
        resp = client.post(
            f"/api/sessions/{sid}/fire",
            json={"transition": "t2", "binding": {"I": "I_AB"}},
        )
        assert resp.status_code == 200
        body = resp.json()
        assert set(body) == {"config", "enabled", "event"}
        assert body["config"] == {
            "marking": {
                "De": [["I_AB"]],
                "I_AB": [],
                "In": [],
                "St1": [["f1"], ["f2"]],
                "St2": [],
            },
            "places": ["De", "I_AB", "In", "St1", "St2"],
            "gamma": {"I": ["I_AB"]},
        }
        assert body["event"] == {
            "transition": "t2",
            "binding": {"I": "I_AB"},
            "consumed": {"In": [["I_AB"]]},
            "produced": {"De": [["I_AB"]]},
            "newPlaces": [],
            "gammaOps": [
                {"variable": "I", "constant": "I_AB", "direction": "+"}
            ],
            "solidArcs": [{"from": "t2", "to": "I_AB"}],
        }
        assert body["enabled"] == [
            {"transition": "t1", "binding": {"D": "f1"}},
            {"transition": "t1", "binding": {"D": "f2"}},
            {"transition": "t4", "binding": {"I": "I_AB"}},
        ]
        view = client.get(f"/api/sessions/{sid}").json()
        assert view["historyLength"] == 2
        assert view["config"] == body["config"]

    def test_fire_not_enabled_is_409_with_enabled_list(self, client, ne2_source):
        sid = make_session(client, ne2_source)
        resp = client.post(
            f"/api/sessions/{sid}/fire",
            json={"transition": "t3", "binding": {"D": "f1", "I": "I_AB"}},
        )
        assert resp.status_code == 409
        body = resp.json()
        assert body == {
            "error": "step t3 [D=f1; I=I_AB] is not enabled",
            "enabled": PI0_ENABLED,
        }
        assert client.get(f"/api/sessions/{sid}").json()["historyLength"] == 1

    def test_fire_unknown_transition_is_409(self, client, ne2_source):
        sid = make_session(client, ne2_source)
        resp = client.post(
            f"/api/sessions/{sid}/fire", json={"transition": "t9", "binding": {}}
        )
        assert resp.status_code == 409
        assert resp.json()["enabled"] == PI0_ENABLED

    def test_binding_defaults_to_empty(self, client):
        source = (
            "net One\nconst a, p\nplace p\ntrans t\n"
            "arc p -> t : a\nmarking p { a }\n"
        )
        sid = make_session(client, source)
        resp = client.post(f"/api/sessions/{sid}/fire", json={"transition": "t"})
        assert resp.status_code == 200
        assert resp.json()["config"]["marking"] == {"p": []}


class TestUndo:
    def test_undo_returns_to_previous_configuration(self, client, ne2_source):
        sid = make_session(client, ne2_source)
        client.post(
            f"/api/sessions/{sid}/fire",
            json={"transition": "t2", "binding": {"I": "I_AB"}},
        )
        resp = client.post(f"/api/sessions/{sid}/undo")
        assert resp.status_code == 200
        body = resp.json()
        assert set(body) == {"config", "enabled", "atRoot"}
        assert body["config"] == PI0_JSON
        assert body["enabled"] == PI0_ENABLED
        assert body["atRoot"] is True

    def test_undo_at_root_is_a_noop(self, client, ne2_source):
        sid = make_session(client, ne2_source)
        resp = client.post(f"/api/sessions/{sid}/undo")
        assert resp.status_code == 200
        assert resp.json()["config"] == PI0_JSON
        assert resp.json()["atRoot"] is True

    def test_undo_walks_back_one_step_at_a_time(self, client, ne2_source):
        sid = make_session(client, ne2_source)
        after_t2 = client.post(
            f"/api/sessions/{sid}/fire",
            json={"transition": "t2", "binding": {"I": "I_AB"}},
        ).json()["config"]
        client.post(
            f"/api/sessions/{sid}/fire",
            json={"transition": "t1", "binding": {"D": "f1"}},
        )
        first = client.post(f"/api/sessions/{sid}/undo").json()
        assert first["config"] == after_t2
        assert first["atRoot"] is False
        second = client.post(f"/api/sessions/{sid}/undo").json()
        assert second["config"] == PI0_JSON
        assert second["atRoot"] is True


class TestDelete:
    def test_delete_then_404(self, client, ne2_source):
        sid = make_session(client, ne2_source)
        resp = client.delete(f"/api/sessions/{sid}")
        assert resp.status_code == 204
        assert resp.content == b""
        assert client.get(f"/api/sessions/{sid}").status_code == 404
        assert client.delete(f"/api/sessions/{sid}").status_code == 404


class TestIsolationAndExpiry:
    def test_sessions_do_not_share_state(self, client, ne2_source):
        a = make_session(client, ne2_source)
        b = make_session(client, ne2_source)
        client.post(
            f"/api/sessions/{a}/fire",
            json={"transition": "t2", "binding": {"I": "I_AB"}},
        )
        view_b = client.get(f"/api/sessions/{b}").json()
        assert view_b["config"] == PI0_JSON
        assert view_b["historyLength"] == 1

    def test_idle_sessions_expire(self, ne2_source):
        with TestClient(create_app(session_ttl=0.05)) as c:
            sid = make_session(c, ne2_source)
            time.sleep(0.12)
            assert c.get(f"/api/sessions/{sid}").status_code == 404

    def test_activity_refreshes_the_ttl(self, ne2_source):
        with TestClient(create_app(session_ttl=0.4)) as c:
            sid = make_session(c, ne2_source)
            for _ in range(4):
                time.sleep(0.15)
                assert c.get(f"/api/sessions/{sid}").status_code == 200

    def test_default_ttl_is_one_hour(self):
        assert SESSION_TTL_SECONDS == 3600.0


class TestHistoryReplay:
    def test_event_history_replays_to_current_config(self, client, ne2_source):
        net = parse(ne2_source).net
        sid = make_session(client, ne2_source)
        enabled = PI0_ENABLED
        taken = []
        for _ in range(8):
            if not enabled:
                break
            step = enabled[0]
            body = client.post(f"/api/sessions/{sid}/fire", json=step).json()
            taken.append((step["transition"], step["binding"]))
            enabled = body["enabled"]
        final = client.get(f"/api/sessions/{sid}").json()
        assert final["historyLength"] == len(taken) + 1
        config = net.initial_configuration()
        for transition, binding in taken:
            config, _event = fire(net, config, transition, binding)
        assert config_to_json(config) == final["config"]


class TestCors:
    def test_configured_origin_is_allowed(self, ne2_source):
        app = create_app(cors_origins=("http://localhost:5173",))
        with TestClient(app) as c:
            resp = c.post(
                "/api/sessions",
                json={"source": ne2_source},
                headers={"Origin": "http://localhost:5173"},
            )
            assert resp.status_code == 201
            assert (
                resp.headers["access-control-allow-origin"]
                == "http://localhost:5173"
            )
