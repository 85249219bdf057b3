"""HTTP/JSON API over sessions, with a server-sent-event journal stream.

One logical writer per session: mutating requests take the session's lock.
Observers (state reads, SSE subscribers) never see a torn state because
every state swap happens under that lock and events fan out after append.
"""

from __future__ import annotations

import queue
import threading
import uuid
from pathlib import Path

from fastapi import Depends, FastAPI, Header, HTTPException
from fastapi.responses import PlainTextResponse, StreamingResponse
from pydantic import BaseModel

from .config import AppConfig
from .grammar import NotExecutable
from .prompts import BudgetTooSmall, CotError, EmptySteps, NoCommandFound
from .scenegen import GeneratorFailed
from .session import (
    BACKEND_ERRORS,
    JournalEvent,
    NoPendingEdit,
    Session,
    SessionDeps,
    UnknownSelectionPath,
    WrongPhase,
    build_deps,
    state_dict,
)

CONFLICT_ERRORS = (WrongPhase, NotExecutable, NoPendingEdit, UnknownSelectionPath)
CONTENT_ERRORS = (NoCommandFound, CotError, BudgetTooSmall, EmptySteps)
UPSTREAM_ERRORS = BACKEND_ERRORS + (GeneratorFailed,)

# Idle SSE streams wake up this often to emit a comment frame. Without the
# timeout the generator thread blocks in queue.get forever, which keeps dead
# connections alive and stalls graceful shutdown indefinitely.
KEEPALIVE_SECONDS = 15.0


class CreateBody(BaseModel):
    session_id: str | None = None


class PromptBody(BaseModel):
    text: str


class EditBody(BaseModel):
    text: str
    selection: list[str] = []


class SessionRegistry:
    def __init__(self, config: AppConfig, deps: SessionDeps):
        self.config = config
        self.deps = deps
        self.sessions: dict[str, Session] = {}
        self.locks: dict[str, threading.Lock] = {}
        self.subscribers: dict[str, list[queue.SimpleQueue]] = {}
        self._lock = threading.Lock()

    def create(self, session_id: str | None = None) -> Session:
        sid = session_id or uuid.uuid4().hex[:12]
        with self._lock:
            if sid in self.sessions:
                raise HTTPException(409, {"error": "SessionExists", "message": sid})
            session = Session(sid, Path(self.config.sessions_dir) / sid, self.deps)
            session.listeners.append(lambda event, sid=sid: self._fanout(sid, event))
            self.sessions[sid] = session
            self.locks[sid] = threading.Lock()
            self.subscribers[sid] = []
        return session

    def get(self, sid: str) -> Session:
        session = self.sessions.get(sid)
        if session is None:
            raise HTTPException(404, {"error": "UnknownSession", "message": sid})
        return session

    def lock_for(self, sid: str) -> threading.Lock:
        self.get(sid)
        return self.locks[sid]

    def subscribe(self, sid: str) -> queue.SimpleQueue:
        q: queue.SimpleQueue = queue.SimpleQueue()
        with self._lock:
            self.subscribers[sid].append(q)
        return q

    def unsubscribe(self, sid: str, q: queue.SimpleQueue) -> None:
        with self._lock:
            try:
                self.subscribers[sid].remove(q)
            except (KeyError, ValueError):
                pass

    def _fanout(self, sid: str, event: JournalEvent) -> None:
        with self._lock:
            targets = list(self.subscribers.get(sid, ()))
        for q in targets:
            q.put(event)


def _sse_frame(event: JournalEvent) -> str:
    return f"id: {event.seq}\nevent: journal\ndata: {event.to_line()}\n\n"


def _live_frames(registry: SessionRegistry, sid: str, after: int):
    session = registry.get(sid)
    q = registry.subscribe(sid)
    try:
        with registry.lock_for(sid):
            backlog = [e for e in session.events if e.seq > after]
            last_seq = session.state.journal_offset
        for event in backlog:
            yield _sse_frame(event)
        while True:
            try:
                event = q.get(timeout=KEEPALIVE_SECONDS)
            except queue.Empty:
                yield ": keepalive\n\n"
                continue
            if event.seq <= last_seq:
                continue
            yield _sse_frame(event)
    finally:
        registry.unsubscribe(sid, q)


def _run_op(registry: SessionRegistry, sid: str, op) -> dict:
    with registry.lock_for(sid):
        try:
            state = op()
        except CONFLICT_ERRORS as err:
            raise HTTPException(409, {"error": type(err).__name__, "message": str(err)})
        except CONTENT_ERRORS as err:
            raise HTTPException(422, {"error": type(err).__name__, "message": str(err)})
        except UPSTREAM_ERRORS as err:
            raise HTTPException(502, {"error": type(err).__name__, "message": str(err)})
    return {"state": state_dict(state)}


def create_app(config: AppConfig, deps: SessionDeps | None = None) -> FastAPI:
    deps = deps or build_deps(config)
    registry = SessionRegistry(config, deps)
    app = FastAPI(title="scene session service")
    app.state.registry = registry

    def check_token(x_api_token: str | None = Header(default=None)) -> None:
        if config.api_token and x_api_token != config.api_token:
            raise HTTPException(401, {"error": "Unauthorized", "message": "bad or missing token"})

    guard = [Depends(check_token)]

    @app.post("/sessions", status_code=201, dependencies=guard)
    def create_session(body: CreateBody | None = None):
        session = registry.create(body.session_id if body else None)
        return {"session_id": session.session_id, "state": state_dict(session.state)}

    @app.post("/sessions/{sid}/prompt", dependencies=guard)
    def submit_prompt(sid: str, body: PromptBody):
        session = registry.get(sid)
        return _run_op(registry, sid, lambda: session.submit_prompt(body.text))

    @app.post("/sessions/{sid}/approve-command", dependencies=guard)
    def approve_command(sid: str):
        session = registry.get(sid)
        return _run_op(registry, sid, session.approve_command)

    @app.post("/sessions/{sid}/reject-command", dependencies=guard)
    def reject_command(sid: str):
        session = registry.get(sid)
        return _run_op(registry, sid, session.reject_command)

    @app.post("/sessions/{sid}/edit", dependencies=guard)
    def submit_edit(sid: str, body: EditBody):
        session = registry.get(sid)
        return _run_op(registry, sid, lambda: session.submit_edit(body.text, body.selection))

    @app.post("/sessions/{sid}/approve-edit", dependencies=guard)
    def approve_edit(sid: str):
        session = registry.get(sid)
        return _run_op(registry, sid, session.approve_edit)

    @app.post("/sessions/{sid}/reject-edit", dependencies=guard)
    def reject_edit(sid: str):
        session = registry.get(sid)
        return _run_op(registry, sid, session.reject_edit)

    @app.post("/sessions/{sid}/render", dependencies=guard)
    def request_render(sid: str):
        session = registry.get(sid)
        return _run_op(registry, sid, session.request_render)

    @app.get("/sessions/{sid}/state", dependencies=guard)
    def get_state(sid: str):
        session = registry.get(sid)
        with registry.lock_for(sid):
            return state_dict(session.state)

    @app.get("/sessions/{sid}/scene", dependencies=guard)
    def get_scene(sid: str):
        session = registry.get(sid)
        with registry.lock_for(sid):
            return PlainTextResponse(session.state.scene_text or "")

    @app.get("/sessions/{sid}/events", dependencies=guard)
    def get_events(sid: str, after: int = 0, stream: str = "live"):
        session = registry.get(sid)

        def snapshot_frames():
            with registry.lock_for(sid):
                backlog = [e for e in session.events if e.seq > after]
            for event in backlog:
                yield _sse_frame(event)

        if stream == "snapshot":
            return StreamingResponse(snapshot_frames(), media_type="text/event-stream")

        return StreamingResponse(_live_frames(registry, sid, after), media_type="text/event-stream")

    if config.static_dir and Path(config.static_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=config.static_dir, html=True), name="ui")

    return app
