"""Planar geometry helpers shared across the engine.

All coordinates are (x, y) pixel tuples in image convention: x grows to the
right, y grows downward.  Under that convention a polygon whose shoelace sum
is negative is counter-clockwise on screen, so ``signed_area`` negates the
shoelace sum to make counter-clockwise rings come out positive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

Point = tuple[float, float]


def distance(a: Point, b: Point) -> float:
    return math.hypot(b[0] - a[0], b[1] - a[1])


def norm(v: Point) -> float:
    return math.hypot(v[0], v[1])


def sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1])


def add(a: Point, b: Point) -> Point:
    return (a[0] + b[0], a[1] + b[1])


def scale(v: Point, k: float) -> Point:
    return (v[0] * k, v[1] * k)


def dot(a: Point, b: Point) -> float:
    return a[0] * b[0] + a[1] * b[1]


def cross(a: Point, b: Point) -> float:
    return a[0] * b[1] - a[1] * b[0]


def orient(o: Point, a: Point, b: Point) -> float:
    """Twice the signed area of triangle (o, a, b)."""
    return cross(sub(a, o), sub(b, o))


def unit(v: Point) -> Point:
    n = norm(v)
    if n == 0.0:
        raise ZeroDivisionError("zero-length vector has no direction")
    return (v[0] / n, v[1] / n)


def midpoint(a: Point, b: Point) -> Point:
    return ((a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0)


def point_line_distance(p: Point, a: Point, b: Point) -> float:
    """Perpendicular distance from p to the infinite line through a and b."""
    d = sub(b, a)
    n = norm(d)
    if n == 0.0:
        raise ZeroDivisionError("line through coincident points is undefined")
    return abs(cross(d, sub(p, a))) / n


def angle_between_deg(u: Point, v: Point) -> float:
    """Unsigned angle between two vectors in degrees, in [0, 180]."""
    return math.degrees(math.atan2(abs(cross(u, v)), dot(u, v)))


def shoelace(vertices: tuple[Point, ...]) -> float:
    """Shoelace sum over the closed ring: sum of x_i*y_{i+1} - x_{i+1}*y_i."""
    total = 0.0
    n = len(vertices)
    for i in range(n):
        x0, y0 = vertices[i]
        x1, y1 = vertices[(i + 1) % n]
        total += x0 * y1 - x1 * y0
    return total


def signed_area(vertices: tuple[Point, ...]) -> float:
    """Signed polygon area, positive for counter-clockwise rings on screen."""
    return -shoelace(vertices) / 2.0


def similarity(p: Point, *, angle_deg: float = 0.0, scale_factor: float = 1.0,
               tx: float = 0.0, ty: float = 0.0, center: Point = (0.0, 0.0)) -> Point:
    """Rotate about center, scale about center, then translate."""
    c = math.cos(math.radians(angle_deg))
    s = math.sin(math.radians(angle_deg))
    x = p[0] - center[0]
    y = p[1] - center[1]
    rx = scale_factor * (c * x - s * y) + center[0] + tx
    ry = scale_factor * (s * x + c * y) + center[1] + ty
    return (rx, ry)


def similarity_points(points, **kwargs) -> tuple[Point, ...]:
    return tuple(similarity(p, **kwargs) for p in points)


@dataclass(frozen=True)
class MirrorTransform:
    """Reflection about a vertical line x = axis_x, or the identity.

    The reflection is an involution, so applying it twice is a no-op and
    the same transform serves as its own inverse.
    """

    reflect: bool
    axis_x: float = 0.0

    @classmethod
    def identity(cls) -> "MirrorTransform":
        return cls(reflect=False)

    def apply(self, p: Point) -> Point:
        if not self.reflect:
            return p
        return (2.0 * self.axis_x - p[0], p[1])

    def apply_many(self, points) -> tuple[Point, ...]:
        return tuple(self.apply(p) for p in points)


def _bbox_contains(a: Point, b: Point, q: Point) -> bool:
    return (min(a[0], b[0]) <= q[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= q[1] <= max(a[1], b[1]))


def segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True if closed segments ab and cd share any point."""
    d1 = orient(c, d, a)
    d2 = orient(c, d, b)
    d3 = orient(a, b, c)
    d4 = orient(a, b, d)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and \
       ((d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)):
        return True
    if d1 == 0 and _bbox_contains(c, d, a):
        return True
    if d2 == 0 and _bbox_contains(c, d, b):
        return True
    if d3 == 0 and _bbox_contains(a, b, c):
        return True
    if d4 == 0 and _bbox_contains(a, b, d):
        return True
    return False


def find_self_intersection(vertices: tuple[Point, ...]) -> tuple[int, int] | None:
    """Scan all non-adjacent edge pairs of the closed ring for a crossing.

    Runs in O(n^2), which is fine for guidance rings of at most a couple of
    dozen vertices.  Adjacent edges share an endpoint by construction and are
    skipped; a zero-length edge is reported against its successor.
    """
    n = len(vertices)
    if n < 3:
        return None
    for i in range(n):
        if vertices[i] == vertices[(i + 1) % n]:
            return (i, (i + 1) % n)
    for i in range(n):
        a = vertices[i]
        b = vertices[(i + 1) % n]
        for j in range(i + 1, n):
            if j == i or (j + 1) % n == i or (i + 1) % n == j:
                continue
            c = vertices[j]
            d = vertices[(j + 1) % n]
            if segments_intersect(a, b, c, d):
                return (i, j)
    return None


def is_simple(vertices: tuple[Point, ...]) -> bool:
    return find_self_intersection(vertices) is None
