"""Guidance polygon construction for the six eyeliner styles.

Upper styles thicken the upper lid by offsetting each lid segment away from
the eye interior; wing variants add an extension point E past the outer
corner.  Lower styles band part of the lower lid.  Two merge operations fuse
an upper polygon with a lower one into a single ring.

Every constructed ring is counter-clockwise on screen (positive signed area
under the y-down convention) and is checked for self-intersection before it
is returned; a crossed ring raises instead of being emitted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .contours import EyeContour
from .errors import (BadConfig, DegenerateAngle, DegenerateContour,
                     MergeSelfIntersection, NoCrossPoint, SelfIntersection,
                     ZeroLengthSegment)
from .features import EyeShapeLabels, SizeLabel
from .geometry import (Point, add, cross, distance, dot, find_self_intersection,
                       midpoint, norm, scale, sub, unit)


class StyleId(str, Enum):
    BASIC = "basic"
    WINGED = "winged"
    DROP = "drop"
    EXTEND = "extend"
    LOWER_OUTER = "lower_outer"
    LOWER_INNER = "lower_inner"


WING_STYLES = (StyleId.WINGED, StyleId.DROP, StyleId.EXTEND)

LOWER_OUTER_TAPER = (1.0, 2.0 / 3.0, 1.0 / 3.0)


@dataclass(frozen=True)
class StyleConfig:
    """Thickness and wing parameters for polygon construction."""

    k_normal: float = 0.35
    k_big: float = 0.25
    wing_angle_deg: float = 15.0
    wing_length_ratio: float = 0.12

    def __post_init__(self):
        if not (self.k_normal > 0 and self.k_big > 0):
            raise BadConfig("thickness factors must be strictly positive")
        if not (0.0 < self.wing_angle_deg < 90.0):
            raise BadConfig("wing angle must lie strictly between 0 and 90 degrees")
        if not (0.0 < self.wing_length_ratio < 1.0):
            raise BadConfig("wing length ratio must lie strictly between 0 and 1")


@dataclass(frozen=True)
class ThicknessProfile:
    """Concrete pixel thicknesses: upper band, lower-outer start, lower-inner."""

    h: float
    h_lower_outer: float
    h_lower_inner: float

    def __post_init__(self):
        if not (self.h > 0 and self.h_lower_outer > 0 and self.h_lower_inner > 0):
            raise BadConfig("thicknesses must be strictly positive")

    @classmethod
    def from_upper(cls, h: float) -> "ThicknessProfile":
        return cls(h=h, h_lower_outer=h, h_lower_inner=h / 3.0)


@dataclass(frozen=True)
class GuidancePolygon:
    """A closed guidance ring tagged with the styles that produced it."""

    styles: tuple[StyleId, ...]
    vertices: tuple[Point, ...]

    @property
    def name(self) -> str:
        return "+".join(s.value for s in self.styles)


@dataclass(frozen=True)
class InnerMergeResult:
    polygon: GuidancePolygon
    cross_point: Point
    fallback_used: bool


def thickness_for(labels: EyeShapeLabels, eye_height: float,
                  cfg: StyleConfig | None = None) -> ThicknessProfile:
    """Upper thickness scales with eye height, reduced for big eyes."""
    cfg = cfg or StyleConfig()
    k = cfg.k_big if labels.size == SizeLabel.BIG else cfg.k_normal
    return ThicknessProfile.from_upper(k * eye_height)


def _require_canonical(c: EyeContour):
    if not c.canonical:
        raise ValueError("style construction needs a canonical contour")


def _away_normal(c: EyeContour, interior_ref: int) -> Point:
    """Unit normal of the corner axis pointing away from the eye interior.

    The interior side is read off a reference lid landmark: p12 when offsetting
    the upper lid, p4 when offsetting the lower lid.
    """
    p0, p8 = c.points[0], c.points[8]
    axis = sub(p8, p0)
    n = norm(axis)
    if n == 0.0:
        raise DegenerateContour("zero-length corner axis")
    candidate = (axis[1] / n, -axis[0] / n)
    side = cross(axis, sub(c.points[interior_ref], p0))
    if side == 0.0:
        raise DegenerateContour("interior reference point lies on the corner axis")
    # candidate sits on the negative-cross side of the axis by construction
    if side < 0.0:
        candidate = scale(candidate, -1.0)
    return candidate


def _segment_offset(a: Point, b: Point, h: float, away: Point, index: int) -> Point:
    seg = sub(b, a)
    length = norm(seg)
    if length == 0.0:
        raise ZeroLengthSegment(index)
    n = (seg[1] / length, -seg[0] / length)
    if dot(n, away) < 0.0:
        n = scale(n, -1.0)
    return add(midpoint(a, b), scale(n, h))


def offset_points(c: EyeContour, h: float) -> tuple[Point, ...]:
    """Offset midpoints of the eight upper-lid segments, distance h outward.

    Returns p0'..p7', where pi' belongs to segment (pi, pi+1).
    """
    _require_canonical(c)
    if h <= 0:
        raise BadConfig("offset distance must be strictly positive")
    away = _away_normal(c, interior_ref=12)
    return tuple(_segment_offset(c.points[i], c.points[i + 1], h, away, i)
                 for i in range(8))


def _checked(styles: tuple[StyleId, ...], vertices: tuple[Point, ...],
             merge: bool = False) -> GuidancePolygon:
    pair = find_self_intersection(vertices)
    if pair is not None:
        name = "+".join(s.value for s in styles)
        if merge:
            raise MergeSelfIntersection(pair, f"merged {name} ring self-intersects at edges {pair}")
        raise SelfIntersection(pair, f"{name} ring self-intersects at edges {pair}")
    return GuidancePolygon(styles=styles, vertices=vertices)


def style_basic(c: EyeContour, h: float) -> GuidancePolygon:
    """Upper-lid band: the lid run out to the corner, offsets back."""
    offsets = offset_points(c, h)
    vertices = tuple(c.points[0:9]) + tuple(reversed(offsets))
    return _checked((StyleId.BASIC,), vertices)


def wing_point(c: EyeContour, style: StyleId, cfg: StyleConfig | None = None) -> Point:
    """Extension point E past the outer corner for a wing variant.

    Winged rotates the corner-axis direction toward the upper side by the
    configured angle; Drop follows the p4 to p8 direction; Extend continues
    straight along the corner axis.
    """
    _require_canonical(c)
    cfg = cfg or StyleConfig()
    p0, p8 = c.points[0], c.points[8]
    length = cfg.wing_length_ratio * distance(p0, p8)
    if style == StyleId.EXTEND:
        direction = unit(sub(p8, p0))
    elif style == StyleId.DROP:
        d = sub(p8, c.points[4])
        if norm(d) == 0.0:
            raise DegenerateAngle("p4 coincides with the outer corner")
        direction = unit(d)
    elif style == StyleId.WINGED:
        base = unit(sub(p8, p0))
        up = _away_normal(c, interior_ref=12)
        theta = math.radians(cfg.wing_angle_deg)
        direction = add(scale(base, math.cos(theta)), scale(up, math.sin(theta)))
    else:
        raise BadConfig(f"{style.value} is not a wing variant")
    return add(p8, scale(direction, length))


def style_with_wing(c: EyeContour, h: float, style: StyleId,
                    cfg: StyleConfig | None = None) -> GuidancePolygon:
    """Basic band extended with wing point E inserted after the outer corner."""
    if style not in WING_STYLES:
        raise BadConfig(f"{style.value} is not a wing variant")
    offsets = offset_points(c, h)
    e = wing_point(c, style, cfg)
    vertices = tuple(c.points[0:9]) + (e,) + tuple(reversed(offsets))
    return _checked((style,), vertices)


def style_lower_outer(c: EyeContour, h: float) -> GuidancePolygon:
    """Outer third of the lower lid, tapering from h down to h/3."""
    _require_canonical(c)
    if h <= 0:
        raise BadConfig("thickness must be strictly positive")
    away = _away_normal(c, interior_ref=4)
    qs = tuple(_segment_offset(c.points[8 + i], c.points[9 + i],
                               h * LOWER_OUTER_TAPER[i], away, 8 + i)
               for i in range(3))
    vertices = tuple(c.points[8:12]) + tuple(reversed(qs))
    return _checked((StyleId.LOWER_OUTER,), vertices)


def style_lower_inner(c: EyeContour, h_inner: float) -> GuidancePolygon:
    """Inner third of the lower lid at constant thickness."""
    _require_canonical(c)
    if h_inner <= 0:
        raise BadConfig("thickness must be strictly positive")
    away = _away_normal(c, interior_ref=4)
    lid = (c.points[13], c.points[14], c.points[15], c.points[0])
    ms = tuple(_segment_offset(lid[i], lid[i + 1], h_inner, away, 13 + i)
               for i in range(3))
    vertices = lid + tuple(reversed(ms))
    return _checked((StyleId.LOWER_INNER,), vertices)


def merge_outer_wing(upper: GuidancePolygon, lower: GuidancePolygon | None,
                     e: Point) -> GuidancePolygon:
    """Fuse a winged upper ring with a lower-outer ring through wing point E.

    The lower band is spliced in at the shared outer corner so the merged ring
    runs along the upper lid, around the lower band, through E, and back along
    the upper offsets.  A missing lower ring returns the upper unchanged.
    """
    if lower is None:
        return upper
    if upper.styles[-1] not in WING_STYLES:
        raise BadConfig("upper ring must be a wing variant")
    if lower.styles != (StyleId.LOWER_OUTER,):
        raise BadConfig("lower ring must be a lower-outer band")
    if upper.vertices[9] != e:
        raise BadConfig("E must be the wing vertex of the upper ring")
    if upper.vertices[8] != lower.vertices[0]:
        raise BadConfig("rings must share the outer corner")
    vertices = upper.vertices[0:9] + lower.vertices[1:] + upper.vertices[9:]
    return _checked(upper.styles + lower.styles, vertices, merge=True)


def fit_cross_point(c: EyeContour, offsets: tuple[Point, ...]) -> Point:
    """Axis crossing of a least-squares quadratic through the upper offsets.

    The offsets are expressed in axis coordinates (t along p0 to p8, s
    perpendicular); the quadratic's real root nearest the inner corner with
    t < 0 becomes the cross point.  Roots further than one eye width before
    the corner are rejected as fit artifacts of nearly flat lids, so a
    near-flat contour behaves like an exactly flat one and falls back.
    """
    _require_canonical(c)
    p0 = c.points[0]
    width = distance(p0, c.points[8])
    u = unit(sub(c.points[8], p0))
    ts = np.array([dot(sub(p, p0), u) for p in offsets])
    ss = np.array([cross(u, sub(p, p0)) for p in offsets])
    c2, c1, c0 = (float(v) for v in np.polyfit(ts, ss, 2))
    if abs(c2) < 1e-14:
        if abs(c1) < 1e-14:
            raise NoCrossPoint("fitted offset curve is constant")
        roots = [-c0 / c1]
    else:
        disc = c1 * c1 - 4.0 * c2 * c0
        if disc < 0.0:
            raise NoCrossPoint("fitted offset curve does not reach the axis")
        sq = math.sqrt(disc)
        roots = [(-c1 - sq) / (2.0 * c2), (-c1 + sq) / (2.0 * c2)]
    usable = [t for t in roots if -width <= t < 0.0]
    if not usable:
        raise NoCrossPoint("no axis crossing before the inner corner")
    t = max(usable)
    return add(p0, scale(u, t))


def merge_inner_basic(upper: GuidancePolygon, lower: GuidancePolygon | None,
                      c: EyeContour, h: float) -> InnerMergeResult:
    """Fuse a basic upper ring with a lower-inner band through cross point E.

    E comes from the fitted offset curve's axis crossing; when the fit never
    crosses before the inner corner, E falls back to a point h/3 beyond p0
    along the axis and the result is flagged.
    """
    if lower is None:
        return InnerMergeResult(polygon=upper, cross_point=upper.vertices[0],
                                fallback_used=False)
    if upper.styles != (StyleId.BASIC,):
        raise BadConfig("upper ring must be the basic band")
    if lower.styles != (StyleId.LOWER_INNER,):
        raise BadConfig("lower ring must be a lower-inner band")
    if upper.vertices[0] != lower.vertices[3]:
        raise BadConfig("rings must share the inner corner")
    offsets = tuple(reversed(upper.vertices[9:]))
    try:
        e = fit_cross_point(c, offsets)
        fallback = False
    except NoCrossPoint:
        p0 = c.points[0]
        e = sub(p0, scale(unit(sub(c.points[8], p0)), h / 3.0))
        fallback = True
    vertices = (lower.vertices[0:3] + upper.vertices + (e,) + lower.vertices[4:])
    polygon = _checked(upper.styles + lower.styles, vertices, merge=True)
    return InnerMergeResult(polygon=polygon, cross_point=e, fallback_used=fallback)
