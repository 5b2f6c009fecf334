"""HTTP and WebSocket front end for guidance sessions.

Wire protocol, client to server, JSON text messages:

* {"type": "frame", "t": <int>, "landmarks": [[x, y], ...]}
* {"type": "freeze"}
* {"type": "unfreeze"}

Server to client:

* {"type": "guidance", ...}  per processed frame
* {"type": "error", "code": <str>, "detail": <str>}

Landmarks arrive normalized; the session's configured image size scales them
to pixels.  Stale frames are dropped silently into the session stats.
"""

from __future__ import annotations

import json
import os

from fastapi import FastAPI, WebSocket, WebSocketDisconnect
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .config import EngineConfig, config_echo, config_schema
from .contours import FaceMeshFrame
from .errors import BadConfig, EngineError, FixtureError, NothingToFreeze, SessionNotFound
from .service import Session, SessionManager


def _frame_from_message(msg: dict, session: Session) -> FaceMeshFrame:
    landmarks = msg.get("landmarks")
    if not isinstance(landmarks, list):
        raise FixtureError("frame message must carry a landmark list")
    try:
        pts = tuple((float(p[0]), float(p[1])) for p in landmarks)
    except (TypeError, ValueError, IndexError) as e:
        raise FixtureError(f"malformed landmarks: {e}") from e
    t = msg.get("t", 0)
    if not isinstance(t, int):
        raise FixtureError("frame timestamp must be an integer")
    cfg = session.config
    return FaceMeshFrame(landmarks=pts, width=cfg.image_w, height=cfg.image_h,
                         timestamp_ms=t)


def create_app(defaults: EngineConfig | None = None,
               static_dir: str | None = None) -> FastAPI:
    """Build the service app; ``static_dir`` optionally hosts a client bundle at /app.

    Sessions hold no secrets and the service is meant for local use, so
    cross-origin requests are allowed: a client served from any static host
    can open sessions and stream frames.
    """
    app = FastAPI(title="eyeguide")
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])
    manager = SessionManager(defaults)
    app.state.manager = manager

    @app.get("/healthz")
    def healthz():
        return {"status": "ok"}

    @app.post("/sessions")
    def open_session(overrides: dict | None = None):
        try:
            session = manager.open_session(overrides or {})
        except BadConfig as e:
            return JSONResponse(status_code=400,
                                content={"error": "bad_config", "detail": str(e)})
        return {"session_id": session.id, "config": config_echo(session.config)}

    @app.get("/sessions/{session_id}/stats")
    def session_stats(session_id: str):
        try:
            session = manager.get(session_id)
        except SessionNotFound as e:
            return JSONResponse(status_code=404,
                                content={"error": "session_not_found", "detail": str(e)})
        return manager.stats_view(session)

    @app.get("/config/schema")
    def schema():
        return config_schema()

    @app.websocket("/sessions/{session_id}/stream")
    async def stream(ws: WebSocket, session_id: str):
        await ws.accept()
        try:
            session = manager.get(session_id)
        except SessionNotFound as e:
            await ws.send_json({"type": "error", "code": "session_not_found",
                                "detail": str(e)})
            await ws.close()
            return
        try:
            while True:
                raw = await ws.receive_text()
                try:
                    msg = json.loads(raw)
                except json.JSONDecodeError as e:
                    await ws.send_json({"type": "error", "code": "bad_message",
                                        "detail": f"not valid JSON: {e.msg}"})
                    continue
                if not isinstance(msg, dict):
                    await ws.send_json({"type": "error", "code": "bad_message",
                                        "detail": "message must be a JSON object"})
                    continue
                kind = msg.get("type")
                if kind == "frame":
                    try:
                        frame = _frame_from_message(msg, session)
                        result = manager.submit_frame(session, frame)
                    except (FixtureError, EngineError) as e:
                        await ws.send_json({"type": "error", "code": "bad_frame",
                                            "detail": str(e)})
                        continue
                    if result is not None:
                        await ws.send_json(result.to_message())
                elif kind == "freeze":
                    try:
                        manager.freeze(session)
                    except NothingToFreeze as e:
                        await ws.send_json({"type": "error", "code": "nothing_to_freeze",
                                            "detail": str(e)})
                elif kind == "unfreeze":
                    manager.unfreeze(session)
                else:
                    await ws.send_json({"type": "error", "code": "unknown_type",
                                        "detail": f"unknown message type: {kind!r}"})
        except WebSocketDisconnect:
            return

    if static_dir is not None:
        if not os.path.isdir(static_dir):
            raise BadConfig(f"static directory does not exist: {static_dir}")
        app.mount("/app", StaticFiles(directory=static_dir, html=True), name="app")

    return app


app = create_app()
