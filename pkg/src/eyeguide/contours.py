"""Landmark ingest: face-mesh frames, eye index maps, and 16-point contours.

A contour stores the eye outline as 16 pixel-coordinate points:

* p0   inner corner (toward the nose)
* p1..p7   upper lid, inner to outer
* p8   outer corner (toward the temple)
* p9..p15  lower lid, outer back to inner

Canonical orientation means the outer corner sits at larger x than the inner
corner, with the upper lid on the smaller-y side.  Contours from the subject's
right eye (image left, in an unmirrored camera frame) arrive with the opposite
x order and are reflected about a vertical line through their centroid; the
reflection is recorded so constructed geometry can be mapped back.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from enum import Enum
from importlib import resources

from .errors import DegenerateContour, FixtureError, IndexOutOfRange
from .geometry import MirrorTransform, Point, distance

CONTOUR_POINTS = 16
MIN_LANDMARKS = 468
MIN_EYE_WIDTH_PX = 1.0


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class FaceMeshFrame:
    """One frame of face-mesh output in normalized image coordinates."""

    landmarks: tuple[Point, ...]
    width: int
    height: int
    timestamp_ms: int = 0

    def __post_init__(self):
        if len(self.landmarks) < MIN_LANDMARKS:
            raise FixtureError(
                f"frame has {len(self.landmarks)} landmarks, need at least {MIN_LANDMARKS}")
        if self.width <= 0 or self.height <= 0:
            raise FixtureError("image size must be strictly positive")
        for p in self.landmarks:
            if not (math.isfinite(p[0]) and math.isfinite(p[1])):
                raise FixtureError("landmark coordinates must be finite")

    def pixel(self, index: int) -> Point:
        x, y = self.landmarks[index]
        return (x * self.width, y * self.height)


@dataclass(frozen=True)
class EyeIndexMap:
    """Landmark indices for both eye contours, in contour point order."""

    right_eye: tuple[int, ...]
    left_eye: tuple[int, ...]

    def __post_init__(self):
        for name, ring in (("right_eye", self.right_eye), ("left_eye", self.left_eye)):
            if len(ring) != CONTOUR_POINTS:
                raise FixtureError(f"{name} must list exactly {CONTOUR_POINTS} indices")
            for i in ring:
                if not isinstance(i, int) or i < 0:
                    raise FixtureError(f"{name} contains a bad index: {i!r}")
        combined = self.right_eye + self.left_eye
        if len(set(combined)) != len(combined):
            raise FixtureError("eye index rings must not share indices")


@dataclass(frozen=True)
class EyeContour:
    """A 16-point eye outline in pixel coordinates."""

    points: tuple[Point, ...]
    side: Side
    canonical: bool = False
    transform: MirrorTransform | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.points) != CONTOUR_POINTS:
            raise DegenerateContour(f"contour needs {CONTOUR_POINTS} points")
        for p in self.points:
            if not (math.isfinite(p[0]) and math.isfinite(p[1])):
                raise DegenerateContour("contour coordinates must be finite")
        if self.canonical and self.outer_corner[0] <= self.inner_corner[0]:
            raise DegenerateContour("canonical contour must have outer corner at larger x")

    @property
    def inner_corner(self) -> Point:
        return self.points[0]

    @property
    def outer_corner(self) -> Point:
        return self.points[8]

    def original_point(self, index: int) -> Point:
        """Point mapped back to the source image frame."""
        p = self.points[index]
        if self.canonical and self.transform is not None:
            return self.transform.apply(p)
        return p

    @property
    def original_inner_corner(self) -> Point:
        return self.original_point(0)


def load_index_map(path) -> EyeIndexMap:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as e:
        raise FixtureError(f"index map is not valid JSON at byte {e.pos}: {e.msg}") from e
    except OSError as e:
        raise FixtureError(f"cannot read index map: {e}") from e
    return index_map_from_dict(doc)


def index_map_from_dict(doc) -> EyeIndexMap:
    if not isinstance(doc, dict):
        raise FixtureError("index map must be a JSON object")
    missing = {"right_eye", "left_eye"} - set(doc)
    if missing:
        raise FixtureError(f"index map missing keys: {sorted(missing)}")
    return EyeIndexMap(right_eye=tuple(doc["right_eye"]), left_eye=tuple(doc["left_eye"]))


def default_index_map() -> EyeIndexMap:
    text = resources.files("eyeguide.data").joinpath("eye_index_map.json").read_text()
    return index_map_from_dict(json.loads(text))


def extract_eye_contours(frame: FaceMeshFrame,
                         index_map: EyeIndexMap) -> tuple[EyeContour, EyeContour]:
    """Pull both eye contours out of a frame, in pixel coordinates.

    Returns (left, right) in subject terms.  Extraction is pure: the same
    frame and map always produce bit-identical contours.
    """
    n = len(frame.landmarks)
    for ring in (index_map.right_eye, index_map.left_eye):
        for i in ring:
            if i >= n:
                raise IndexOutOfRange(f"index {i} out of range for {n} landmarks")
    right = EyeContour(points=tuple(frame.pixel(i) for i in index_map.right_eye),
                       side=Side.RIGHT)
    left = EyeContour(points=tuple(frame.pixel(i) for i in index_map.left_eye),
                      side=Side.LEFT)
    for c in (left, right):
        if distance(c.inner_corner, c.outer_corner) < MIN_EYE_WIDTH_PX:
            raise DegenerateContour(
                f"{c.side.value} eye corners are less than {MIN_EYE_WIDTH_PX} px apart")
    return left, right


def _centroid_x(points: tuple[Point, ...]) -> float:
    return sum(p[0] for p in points) / len(points)


def _lid_side_signs(points: tuple[Point, ...]) -> tuple[float, float]:
    """Cross-product side signs of the farthest upper and lower lid points."""
    from .geometry import cross, sub

    p0, p8 = points[0], points[8]
    axis = sub(p8, p0)

    def extreme(indices):
        best, best_mag = 0.0, -1.0
        for i in indices:
            s = cross(axis, sub(points[i], p0))
            if abs(s) > best_mag:
                best, best_mag = s, abs(s)
        return best

    return extreme(range(1, 8)), extreme(range(9, 16))


def canonicalize(contour: EyeContour) -> EyeContour:
    """Return the contour in canonical orientation, recording the transform.

    Already-canonical contours pass through unchanged, so the operation is
    idempotent.  A contour whose corners share an x coordinate cannot be
    oriented and raises DegenerateContour, as does one whose lids bulge to
    the same side of the corner axis.
    """
    if contour.canonical:
        return contour
    p0 = contour.inner_corner
    p8 = contour.outer_corner
    if distance(p0, p8) < MIN_EYE_WIDTH_PX:
        raise DegenerateContour("eye corners are too close to orient")
    if p8[0] == p0[0]:
        raise DegenerateContour("eye corners share an x coordinate")
    if p8[0] > p0[0]:
        transform = MirrorTransform.identity()
        points = contour.points
    else:
        transform = MirrorTransform(reflect=True, axis_x=_centroid_x(contour.points))
        points = transform.apply_many(contour.points)
    upper, lower = _lid_side_signs(points)
    if upper != 0.0 and lower != 0.0 and (upper > 0) == (lower > 0):
        raise DegenerateContour("lids bulge to the same side of the corner axis")
    return replace(contour, points=points, canonical=True, transform=transform)


def uncanonicalize(vertices: tuple[Point, ...], contour: EyeContour) -> tuple[Point, ...]:
    """Map constructed vertices back to the source image frame.

    Reflection flips ring orientation, so the vertex order is reversed when
    the recorded transform mirrors, keeping rings counter-clockwise.
    """
    if not contour.canonical or contour.transform is None:
        raise DegenerateContour("contour carries no canonicalization transform")
    t = contour.transform
    if not t.reflect:
        return tuple(vertices)
    return tuple(reversed(t.apply_many(vertices)))


def load_fixture(path) -> tuple[int, int, list[FaceMeshFrame]]:
    """Load a landmark fixture file: image size plus a frame sequence."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as e:
        raise FixtureError(f"fixture is not valid JSON at byte {e.pos}: {e.msg}") from e
    except OSError as e:
        raise FixtureError(f"cannot read fixture: {e}") from e
    if not isinstance(doc, dict) or "image" not in doc or "frames" not in doc:
        raise FixtureError("fixture must be an object with 'image' and 'frames'")
    image = doc["image"]
    if not isinstance(image, dict) or "w" not in image or "h" not in image:
        raise FixtureError("fixture image must carry 'w' and 'h'")
    w, h = image["w"], image["h"]
    if not isinstance(w, int) or not isinstance(h, int) or w <= 0 or h <= 0:
        raise FixtureError("fixture image size must be positive integers")
    frames = []
    if not isinstance(doc["frames"], list) or not doc["frames"]:
        raise FixtureError("fixture must carry a non-empty frame list")
    for k, f in enumerate(doc["frames"]):
        if not isinstance(f, dict) or "t" not in f or "landmarks" not in f:
            raise FixtureError(f"frame {k} must carry 't' and 'landmarks'")
        lm = f["landmarks"]
        if not isinstance(lm, list):
            raise FixtureError(f"frame {k} landmarks must be a list")
        try:
            pts = tuple((float(p[0]), float(p[1])) for p in lm)
        except (TypeError, ValueError, IndexError) as e:
            raise FixtureError(f"frame {k} landmarks are malformed: {e}") from e
        frames.append(FaceMeshFrame(landmarks=pts, width=w, height=h,
                                    timestamp_ms=int(f["t"])))
    return w, h, frames
