"""Streaming guidance sessions.

A session receives face-mesh frames and returns guidance for each.  It is
live by default: every frame is classified and styled from scratch.  Freezing
captures the current labels and recommendation (including the concrete
thickness in pixels); later frames keep that styling decision while polygon
geometry continues to track the incoming contours.  Unfreezing resumes live
reclassification.

One writer per session: submissions and freeze toggles take a per-session
lock, so interleaved callers never observe a half-updated session.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field
from enum import Enum

from .config import EngineConfig, apply_overrides, default_engine_config
from .contours import FaceMeshFrame
from .errors import DegenerateContour, EngineError, HeightZero, NothingToFreeze, SessionNotFound
from .pipeline import FrameGuidance, guidance_document, guide_frame


class SessionState(str, Enum):
    LIVE = "live"
    FROZEN = "frozen"


@dataclass
class SessionStats:
    frames_processed: int = 0
    frames_dropped: int = 0
    last_latency_ms: float = 0.0


@dataclass
class GuidanceFrame:
    """Result of one frame submission, ready for serialization."""

    t: int
    detection_ok: bool
    frozen: bool
    fallback_used: bool = False
    guidance: FrameGuidance | None = None
    error_code: str | None = None

    def to_message(self) -> dict:
        msg = {
            "type": "guidance",
            "t": self.t,
            "detection_ok": self.detection_ok,
            "frozen": self.frozen,
            "fallback_used": self.fallback_used,
        }
        if self.guidance is not None:
            doc = guidance_document(self.guidance)
            msg["image"] = doc["image"]
            msg["eyes"] = doc["eyes"]
            msg["spacing"] = doc["spacing"]
        if self.error_code is not None:
            msg["error_code"] = self.error_code
        return msg


@dataclass
class Session:
    id: str
    config: EngineConfig
    state: SessionState = SessionState.LIVE
    frozen_styling: dict | None = None
    last_ok: FrameGuidance | None = None
    last_t: int | None = None
    stats: SessionStats = field(default_factory=SessionStats)
    lock: threading.Lock = field(default_factory=threading.Lock)


class SessionManager:
    """Owns all sessions and runs frames through the shared pipeline."""

    def __init__(self, defaults: EngineConfig | None = None):
        self._defaults = defaults or default_engine_config()
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    @property
    def defaults(self) -> EngineConfig:
        return self._defaults

    def open_session(self, overrides: dict | None = None) -> Session:
        cfg = self._defaults
        if overrides:
            cfg = apply_overrides(cfg, overrides)
        session = Session(id=uuid.uuid4().hex[:12], config=cfg)
        with self._lock:
            self._sessions[session.id] = session
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise SessionNotFound(f"no session {session_id!r}")
        return session

    def close(self, session_id: str):
        with self._lock:
            self._sessions.pop(session_id, None)

    def submit_frame(self, session: Session, frame: FaceMeshFrame) -> GuidanceFrame | None:
        """Analyze one frame under the session's current state.

        Frames older than the newest already-processed timestamp are stale
        leftovers of a backlog; they are dropped (counted, returning None)
        because superseded guidance has no display value.
        """
        with session.lock:
            if session.last_t is not None and frame.timestamp_ms < session.last_t:
                session.stats.frames_dropped += 1
                return None
            start = time.perf_counter()
            frozen = session.frozen_styling if session.state == SessionState.FROZEN else None
            try:
                guidance = guide_frame(frame, session.config, frozen=frozen)
            except (DegenerateContour, HeightZero) as e:
                result = GuidanceFrame(t=frame.timestamp_ms, detection_ok=False,
                                       frozen=session.state == SessionState.FROZEN,
                                       error_code=_error_code(e))
            else:
                session.last_ok = guidance
                result = GuidanceFrame(t=frame.timestamp_ms, detection_ok=True,
                                       frozen=session.state == SessionState.FROZEN,
                                       fallback_used=guidance.fallback_used,
                                       guidance=guidance)
            session.last_t = frame.timestamp_ms
            session.stats.frames_processed += 1
            session.stats.last_latency_ms = (time.perf_counter() - start) * 1000.0
            return result

    def freeze(self, session: Session):
        """Pin the current labels and recommendation for subsequent frames."""
        with session.lock:
            if session.last_ok is None:
                raise NothingToFreeze("no successfully analyzed frame to freeze")
            g = session.last_ok
            session.frozen_styling = {
                side: {
                    "labels": eye.analysis.labels,
                    "recommendation": eye.recommendation,
                }
                for side, eye in (("left", g.left), ("right", g.right))
            }
            session.state = SessionState.FROZEN

    def unfreeze(self, session: Session):
        with session.lock:
            session.state = SessionState.LIVE
            session.frozen_styling = None

    def stats_view(self, session: Session) -> dict:
        with session.lock:
            return {
                "session_id": session.id,
                "state": session.state.value,
                "frames_processed": session.stats.frames_processed,
                "frames_dropped": session.stats.frames_dropped,
                "last_latency_ms": session.stats.last_latency_ms,
            }


def _error_code(e: EngineError) -> str:
    if isinstance(e, HeightZero):
        return "height_zero"
    if isinstance(e, DegenerateContour):
        return "degenerate_contour"
    return "engine_error"
