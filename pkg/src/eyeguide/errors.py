"""Error types raised by the guidance engine."""

from __future__ import annotations


class EngineError(Exception):
    """Base class for all engine errors."""


class FixtureError(EngineError):
    """A landmark fixture or index map file is malformed."""


class BadConfig(EngineError):
    """A configuration document contains unknown keys or invalid values."""


class IndexOutOfRange(EngineError):
    """An index map references a landmark index the frame does not have."""


class DegenerateContour(EngineError):
    """A contour is too collapsed or ambiguous to orient."""


class HeightZero(EngineError):
    """Eye height is zero, so the aspect ratio is undefined."""


class DegenerateAngle(EngineError):
    """A direction vector needed for a construction has zero length."""


class ZeroLengthSegment(EngineError):
    """A contour segment has zero length, so its normal is undefined."""

    def __init__(self, index: int):
        super().__init__(f"segment {index} has zero length")
        self.index = index


class SelfIntersection(EngineError):
    """A constructed polygon intersects itself."""

    def __init__(self, pair: tuple[int, int], message: str | None = None):
        super().__init__(message or f"polygon edges {pair[0]} and {pair[1]} intersect")
        self.pair = pair


class MergeSelfIntersection(SelfIntersection):
    """A merged polygon intersects itself."""


class NoCrossPoint(EngineError):
    """The fitted offset curve has no axis crossing before the inner corner."""


class IncompleteRules(EngineError):
    """A rule table does not cover every label."""

    def __init__(self, missing: list[str]):
        super().__init__(f"rule table missing entries for: {', '.join(missing)}")
        self.missing = missing


class UnknownStyle(EngineError):
    """A rule table or override names a style the engine does not define."""


class NothingToFreeze(EngineError):
    """Freeze was requested before any successfully analyzed frame."""


class SessionNotFound(EngineError):
    """No session exists with the requested id."""
