"""REST session service: parse a net once, then fire and undo step by step.

Sessions are held in memory, keyed by 128-bit random URL-safe ids, and
expire after an hour of inactivity.  All mutating operations on one
session are serialized by a per-session lock.  Every response carries the
current configuration and the currently enabled steps so clients never
need to recompute semantics.

Routes (JSON request/response bodies):

* ``POST   /api/sessions`` ``{source}`` — 201 with ``{id, config,
  enabled}``, or 400 with parse/validation diagnostics.
* ``GET    /api/sessions/{id}`` — ``{config, enabled, historyLength}``.
* ``GET    /api/sessions/{id}/net`` — structural net view for rendering.
* ``POST   /api/sessions/{id}/fire`` ``{transition, binding}`` — 200 with
  ``{config, enabled, event}``, or 409 listing the enabled steps.
* ``POST   /api/sessions/{id}/undo`` — ``{config, enabled, atRoot}``.
* ``DELETE /api/sessions/{id}`` — 204.

Unknown or expired session ids yield 404.  CORS is enabled for the
configured UI origins.
"""

from __future__ import annotations

import secrets
import threading
import time

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response
from pydantic import BaseModel

from .dsl import ParseError, parse
from .export import config_to_json, event_to_json, net_to_json, steps_to_json
from .semantics import NotEnabledError, UnknownTransitionError, enabled_set, fire

SESSION_TTL_SECONDS = 3600.0


class CreateSessionBody(BaseModel):
    source: str


class FireBody(BaseModel):
    transition: str
    binding: dict = {}


class _Session:
    def __init__(self, session_id: str, net):
        self.id = session_id
        self.net = net
        self.configs = [net.initial_configuration()]
        self.events = []
        self.lock = threading.Lock()
        self.last_access = time.monotonic()

    def touch(self):
        self.last_access = time.monotonic()

    @property
    def config(self):
        return self.configs[-1]


class SessionStore:
    """In-memory session table with idle expiry."""

    def __init__(self, ttl: float = SESSION_TTL_SECONDS):
        self.ttl = ttl
        self._sessions: dict[str, _Session] = {}
        self._lock = threading.Lock()

    def _expired(self, session: _Session) -> bool:
        return time.monotonic() - session.last_access > self.ttl

    def sweep(self):
        with self._lock:
            dead = [sid for sid, s in self._sessions.items() if self._expired(s)]
            for sid in dead:
                del self._sessions[sid]

    def create(self, net) -> _Session:
        self.sweep()
        with self._lock:
            session_id = secrets.token_urlsafe(16)  # 128 bits
            session = _Session(session_id, net)
            self._sessions[session_id] = session
            return session

    def get(self, session_id: str):
        with self._lock:
            session = self._sessions.get(session_id)
            if session is None:
                return None
            if self._expired(session):
                del self._sessions[session_id]
                return None
            session.touch()
            return session

    def delete(self, session_id: str) -> bool:
        with self._lock:
            return self._sessions.pop(session_id, None) is not None


def _not_found() -> JSONResponse:
    return JSONResponse({"error": "unknown session"}, status_code=404)


def _session_view(session: _Session) -> dict:
    return {
        "config": config_to_json(session.config),
        "enabled": steps_to_json(enabled_set(session.net, session.config)),
    }


def create_app(
    ui_dir: str = None,
    cors_origins=("*",),
    session_ttl: float = SESSION_TTL_SECONDS,
) -> FastAPI:
    """Build the FastAPI application (optionally serving built UI assets)."""
    app = FastAPI(title="variable Petri net sessions")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = SessionStore(ttl=session_ttl)
    app.state.store = store

    @app.post("/api/sessions", status_code=201)
    def create_session(body: CreateSessionBody):
        try:
            doc = parse(body.source)
        except ParseError as exc:
            return JSONResponse(
                {
                    "error": "invalid source",
                    "diagnostics": [
                        {
                            "line": d.span.line,
                            "column": d.span.column,
                            "length": d.span.length,
                            "message": d.message,
                        }
                        for d in exc.diagnostics
                    ],
                },
                status_code=400,
            )
        session = store.create(doc.net)
        return {"id": session.id, **_session_view(session)}

    @app.get("/api/sessions/{session_id}")
    def get_session(session_id: str):
        session = store.get(session_id)
        if session is None:
            return _not_found()
        with session.lock:
            return {**_session_view(session), "historyLength": len(session.configs)}

    @app.get("/api/sessions/{session_id}/net")
    def get_net(session_id: str):
        session = store.get(session_id)
        if session is None:
            return _not_found()
        return net_to_json(session.net)

    @app.post("/api/sessions/{session_id}/fire")
    def fire_step(session_id: str, body: FireBody):
        session = store.get(session_id)
        if session is None:
            return _not_found()
        with session.lock:
            try:
                binding = {str(k): str(v) for k, v in body.binding.items()}
                config, event = fire(session.net, session.config, body.transition, binding)
            except (NotEnabledError, UnknownTransitionError) as exc:
                return JSONResponse(
                    {
                        "error": str(exc),
                        "enabled": steps_to_json(
                            enabled_set(session.net, session.config)
                        ),
                    },
                    status_code=409,
                )
            session.configs.append(config)
            session.events.append(event)
            return {**_session_view(session), "event": event_to_json(event)}

    @app.post("/api/sessions/{session_id}/undo")
    def undo_step(session_id: str):
        session = store.get(session_id)
        if session is None:
            return _not_found()
        with session.lock:
            if len(session.configs) > 1:
                session.configs.pop()
                session.events.pop()
            return {**_session_view(session), "atRoot": len(session.configs) == 1}

    @app.delete("/api/sessions/{session_id}", status_code=204)
    def delete_session(session_id: str):
        if not store.delete(session_id):
            return _not_found()
        return Response(status_code=204)

    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
