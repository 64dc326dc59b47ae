"""HTTP session service backing the mutation explorer.

Sessions are in-memory with idle expiry; each session's mutations are
serialized behind a per-session lock, distinct sessions proceed in
parallel.  The current state is always a recomputation target: it equals
apply_sequence(frame(base), history) at all times, and undo recomputes
from the base rather than inverting."""

import threading
import time
import uuid
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .core import frame, vertex_status
from .errors import FrozenVertexMutation, QuiverError, UnknownVertex
from .families import FAMILY_NAMES, make_family
from .io import InvalidQuiverDocument, quiver_from_doc
from .sequences import apply_sequence

DEFAULT_IDLE_EXPIRY = 3600.0


class Session:
    def __init__(self, base):
        self.id = uuid.uuid4().hex
        self.base = base
        self.history = []
        self.current = frame(base)
        self.lock = threading.Lock()
        self.touched = time.monotonic()

    def touch(self):
        self.touched = time.monotonic()

    def state(self):
        q = self.current.quiver
        return {
            "id": self.id,
            "vertices": [
                {"id": v, "status": vertex_status(self.current, v).label, "frozen": False}
                for v in q.mutable
            ]
            + [{"id": v, "status": None, "frozen": True} for v in q.frozen],
            "arrows": [
                {"from": src, "to": dst, "weight": w} for src, dst, w in q.arrows()
            ],
            "history": list(self.history),
            "all_red": self.current.all_red(),
        }

    def mutate(self, vertex):
        self.current = apply_sequence(self.current, [vertex], check_sign_coherence=True)
        self.history.append(vertex)

    def undo(self):
        if self.history:
            self.history.pop()
        self.current = apply_sequence(
            frame(self.base), self.history, check_sign_coherence=True
        )


class SessionStore:
    def __init__(self, idle_expiry=DEFAULT_IDLE_EXPIRY):
        self.idle_expiry = idle_expiry
        self._sessions = {}
        self._lock = threading.Lock()

    def _purge(self):
        now = time.monotonic()
        stale = [
            sid
            for sid, s in self._sessions.items()
            if now - s.touched > self.idle_expiry
        ]
        for sid in stale:
            del self._sessions[sid]

    def create(self, base):
        s = Session(base)
        with self._lock:
            self._purge()
            self._sessions[s.id] = s
        return s

    def get(self, sid):
        with self._lock:
            self._purge()
            return self._sessions.get(sid)

    def delete(self, sid):
        with self._lock:
            return self._sessions.pop(sid, None) is not None


def create_app(store=None, static_dir=None):
    store = store if store is not None else SessionStore()
    app = FastAPI(title="qmut explorer service")
    app.state.store = store

    def error(status, message):
        return JSONResponse(status_code=status, content={"error": message})

    async def body_json(request):
        try:
            return await request.json()
        except Exception:
            return None

    @app.get("/families")
    def families():
        return {
            "families": [
                {"name": name, "params": (["rays"] if name == "star" else [])}
                for name in FAMILY_NAMES
            ]
        }

    @app.post("/sessions")
    async def create_session(request: Request):
        doc = await body_json(request)
        if doc is None:
            return error(400, "malformed JSON body")
        try:
            base = quiver_from_doc(doc)
        except InvalidQuiverDocument as e:
            return error(422, str(e))
        if base.frozen:
            return error(422, "session quivers must be unframed")
        s = store.create(base)
        return JSONResponse(status_code=201, content={"id": s.id, "state": s.state()})

    @app.post("/sessions/from-family")
    async def create_from_family(request: Request):
        doc = await body_json(request)
        if doc is None or "name" not in doc:
            return error(400, "expected {name, params?, level?}")
        try:
            t = make_family(str(doc["name"]), doc.get("params"))
            level = int(doc.get("level", 1))
            if level < 1:
                raise ValueError("level must be >= 1")
            base = t.level(level)
        except (QuiverError, ValueError, TypeError) as e:
            return error(422, str(e))
        s = store.create(base)
        return JSONResponse(status_code=201, content={"id": s.id, "state": s.state()})

    @app.get("/sessions/{sid}")
    def get_session(sid: str):
        s = store.get(sid)
        if s is None:
            return error(404, "unknown session")
        with s.lock:
            s.touch()
            return s.state()

    @app.post("/sessions/{sid}/mutate")
    async def mutate_session(sid: str, request: Request):
        s = store.get(sid)
        if s is None:
            return error(404, "unknown session")
        doc = await body_json(request)
        if doc is None or "vertex" not in doc:
            return error(400, "expected {vertex}")
        with s.lock:
            s.touch()
            try:
                s.mutate(str(doc["vertex"]))
            except (UnknownVertex, FrozenVertexMutation) as e:
                return error(409, str(e))
            except QuiverError as e:
                return error(409, str(e))
            return s.state()

    @app.post("/sessions/{sid}/undo")
    def undo_session(sid: str):
        s = store.get(sid)
        if s is None:
            return error(404, "unknown session")
        with s.lock:
            s.touch()
            s.undo()
            return s.state()

    @app.delete("/sessions/{sid}", status_code=204)
    def delete_session(sid: str):
        if not store.delete(sid):
            return error(404, "unknown session")
        return JSONResponse(status_code=204, content=None)

    # static_dir: None auto-detects the bundled explorer UI, False disables
    if static_dir is None:
        candidate = Path(__file__).resolve().parents[2] / "frontend" / "dist"
        static_dir = candidate if candidate.is_dir() else False
    if static_dir and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app


def serve(port, addr="127.0.0.1", static_dir=None):
    import uvicorn

    app = create_app(static_dir=static_dir)
    uvicorn.run(app, host=addr, port=port, log_level="warning")
