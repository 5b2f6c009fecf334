import math

import pytest
from hypothesis import given

from eyeguide.contours import EyeContour, Side, canonicalize
from eyeguide.errors import (BadConfig, DegenerateAngle, DegenerateContour,
                             SelfIntersection, ZeroLengthSegment)
from eyeguide.features import EyeShapeLabels, SizeLabel, SpacingLabel, TurnLabel
from eyeguide.geometry import distance, signed_area, similarity_points
from eyeguide.styles import (LOWER_OUTER_TAPER, StyleConfig, StyleId,
                             ThicknessProfile, offset_points, style_basic,
                             style_lower_inner, style_lower_outer,
                             style_with_wing, thickness_for, wing_point)
from eyeguide.synth import parabolic_contour_from_peaks

from conftest import canonical_contour
from strategies import canonical_contours
from oracles import angle_dot_deg, perp_distance, polygon_is_simple

FLAT_STRIP = canonical_contour(
    [(4.0 * i, 0.0) for i in range(9)]
    + [(32.0 - 4.0 * j, 4.0 * (1 - ((32 - 4.0 * j - 16) / 16) ** 2))
       for j in range(1, 8)])

NOTCHED = canonical_contour(
    [(0.0, 0.0), (4.0, -3.0), (8.0, -6.0), (12.0, -7.0), (16.0, -1.0),
     (20.0, -7.0), (24.0, -6.0), (28.0, -3.0), (32.0, 0.0)]
    + [(32.0 - 4.0 * j, 4.0 * (1 - ((32 - 4.0 * j - 16) / 16) ** 2))
       for j in range(1, 8)])


def labels(size=SizeLabel.AVERAGE, turn=TurnLabel.DOWNTURNED,
           spacing=SpacingLabel.AVERAGE):
    return EyeShapeLabels(size=size, turn=turn, spacing=spacing)


def test_offset_of_flat_segment():
    off = offset_points(FLAT_STRIP, 2.0)
    assert off[0] == (2.0, -2.0)
    assert all(o == (4.0 * i + 2.0, -2.0) for i, o in enumerate(off))


def test_offsets_e30_distance_exact(e30):
    off = offset_points(e30, 3.0)
    assert len(off) == 8
    for i, o in enumerate(off):
        a, b = e30.points[i], e30.points[i + 1]
        assert perp_distance(o, a, b) == pytest.approx(3.0, abs=1e-12)
        mid = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
        assert distance(o, mid) == pytest.approx(3.0, abs=1e-12)
        assert o[1] < mid[1]  # strictly above the lid in image terms


def test_offsets_vanish_with_h(e30):
    off = offset_points(e30, 1e-9)
    for i, o in enumerate(off):
        a, b = e30.points[i], e30.points[i + 1]
        mid = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
        assert distance(o, mid) == pytest.approx(1e-9, rel=1e-6)


def test_offsets_require_positive_h(e30):
    with pytest.raises(BadConfig):
        offset_points(e30, 0.0)


def test_offsets_zero_length_segment(e30):
    pts = list(e30.points)
    pts[2] = pts[1]
    with pytest.raises(ZeroLengthSegment) as e:
        offset_points(canonical_contour(pts), 2.0)
    assert e.value.index == 1


def test_offsets_need_canonical_contour(e30):
    raw = EyeContour(points=e30.points, side=Side.LEFT, canonical=False)
    with pytest.raises(ValueError):
        offset_points(raw, 2.0)


def test_offset_direction_is_away_from_p12(e30):
    rotated = canonical_contour(similarity_points(e30.points, angle_deg=25.0))
    p0, p8 = rotated.points[0], rotated.points[8]
    axis = (p8[0] - p0[0], p8[1] - p0[1])

    def side(p):
        return axis[0] * (p[1] - p0[1]) - axis[1] * (p[0] - p0[0])

    ref = side(rotated.points[12])
    for o in offset_points(rotated, 2.5):
        assert side(o) * ref < 0


def test_style_basic_shape(e30):
    p = style_basic(e30, 3.0)
    assert p.styles == (StyleId.BASIC,)
    assert len(p.vertices) == 17
    assert p.vertices[0:9] == e30.points[0:9]
    assert p.vertices[9:] == tuple(reversed(offset_points(e30, 3.0)))
    assert signed_area(p.vertices) > 0
    assert polygon_is_simple(p.vertices)


def test_style_basic_flat_strip():
    p = style_basic(FLAT_STRIP, 2.0)
    assert p.vertices[0] == (0.0, 0.0)
    assert p.vertices[8] == (32.0, 0.0)
    assert p.vertices[9] == (30.0, -2.0)
    assert signed_area(p.vertices) == pytest.approx(30.0 * 2.0, abs=1e-12)


def test_style_basic_self_intersection_raises():
    with pytest.raises(SelfIntersection) as e:
        style_basic(NOTCHED, 6.0)
    assert len(e.value.pair) == 2


def test_wing_points_e30(e30):
    p8 = (30.0, 0.0)
    e_winged = wing_point(e30, StyleId.WINGED)
    theta = math.radians(15.0)
    assert e_winged[0] == pytest.approx(30.0 + 3.6 * math.cos(theta), abs=1e-12)
    assert e_winged[1] == pytest.approx(-3.6 * math.sin(theta), abs=1e-12)

    e_extend = wing_point(e30, StyleId.EXTEND)
    assert e_extend == pytest.approx((33.6, 0.0), abs=1e-12)

    e_drop = wing_point(e30, StyleId.DROP)
    d = (15.0, 5.5)
    n = math.hypot(*d)
    assert e_drop[0] == pytest.approx(30.0 + 3.6 * d[0] / n, abs=1e-12)
    assert e_drop[1] == pytest.approx(3.6 * d[1] / n, abs=1e-12)

    for e in (e_winged, e_extend, e_drop):
        assert distance(e, p8) == pytest.approx(3.6, rel=1e-12)


def test_wing_point_rejects_non_wing_style(e30):
    with pytest.raises(BadConfig):
        wing_point(e30, StyleId.BASIC)


def test_drop_degenerate_when_p4_meets_corner(e30):
    pts = list(e30.points)
    pts[4] = pts[8]
    with pytest.raises(DegenerateAngle):
        wing_point(canonical_contour(pts), StyleId.DROP)


@given(canonical_contours())
def test_wing_law_property(c):
    width = distance(c.points[0], c.points[8])
    for style in (StyleId.WINGED, StyleId.DROP, StyleId.EXTEND):
        e = wing_point(c, style)
        assert distance(e, c.points[8]) == pytest.approx(0.12 * width, rel=1e-12)


@given(canonical_contours())
def test_winged_angle_property(c):
    e = wing_point(c, StyleId.WINGED)
    p0, p8 = c.points[0], c.points[8]
    wing_vec = (e[0] - p8[0], e[1] - p8[1])
    axis_out = (p8[0] - p0[0], p8[1] - p0[1])
    assert angle_dot_deg(wing_vec, axis_out) == pytest.approx(15.0, abs=1e-9)
    # the wing tilts toward the upper-lid side
    side_wing = axis_out[0] * wing_vec[1] - axis_out[1] * wing_vec[0]
    p4_vec = (c.points[4][0] - p0[0], c.points[4][1] - p0[1])
    side_p4 = axis_out[0] * p4_vec[1] - axis_out[1] * p4_vec[0]
    assert side_wing * side_p4 > 0


def test_style_with_wing_shape(e30):
    p = style_with_wing(e30, 3.0, StyleId.WINGED)
    assert p.styles == (StyleId.WINGED,)
    assert len(p.vertices) == 18
    assert p.vertices[9] == wing_point(e30, StyleId.WINGED)
    assert signed_area(p.vertices) > 0
    assert polygon_is_simple(p.vertices)
    # E is the vertex farthest from the inner corner
    far = max(p.vertices, key=lambda v: distance(v, e30.points[0]))
    assert far == p.vertices[9]


def test_style_with_wing_rejects_basic(e30):
    with pytest.raises(BadConfig):
        style_with_wing(e30, 3.0, StyleId.BASIC)


def test_wing_config_overrides(e30):
    cfg = StyleConfig(wing_angle_deg=30.0, wing_length_ratio=0.2)
    e = wing_point(e30, StyleId.WINGED, cfg)
    assert distance(e, e30.points[8]) == pytest.approx(0.2 * 30.0, rel=1e-12)
    wing_vec = (e[0] - 30.0, e[1] - 0.0)
    assert angle_dot_deg(wing_vec, (30.0, 0.0)) == pytest.approx(30.0, abs=1e-9)


def test_style_lower_outer_taper(e30):
    p = style_lower_outer(e30, 3.0)
    assert p.styles == (StyleId.LOWER_OUTER,)
    assert len(p.vertices) == 7
    assert p.vertices[0:4] == e30.points[8:12]
    # reversed offsets: vertex 6 belongs to segment (p8, p9) at full thickness
    expected = [3.0 * t for t in LOWER_OUTER_TAPER]
    for k in range(3):
        q = p.vertices[6 - k]
        a, b = e30.points[8 + k], e30.points[9 + k]
        assert perp_distance(q, a, b) == pytest.approx(expected[k], abs=1e-12)
        mid = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
        assert q[1] > mid[1]  # strictly below the lower lid
    assert signed_area(p.vertices) > 0
    assert polygon_is_simple(p.vertices)


def test_style_lower_inner_constant(e30):
    p = style_lower_inner(e30, 1.0)
    assert p.styles == (StyleId.LOWER_INNER,)
    assert len(p.vertices) == 7
    assert p.vertices[0:4] == (e30.points[13], e30.points[14], e30.points[15],
                               e30.points[0])
    lid = (e30.points[13], e30.points[14], e30.points[15], e30.points[0])
    for k in range(3):
        m = p.vertices[6 - k]
        assert perp_distance(m, lid[k], lid[k + 1]) == pytest.approx(1.0, abs=1e-12)
        mid = ((lid[k][0] + lid[k + 1][0]) / 2, (lid[k][1] + lid[k + 1][1]) / 2)
        assert m[1] > mid[1]
    assert signed_area(p.vertices) > 0
    assert polygon_is_simple(p.vertices)


def test_lower_styles_flat_upper_lid_degenerate():
    # p4 sits exactly on the corner axis: the interior side is unreadable
    with pytest.raises(DegenerateContour):
        style_lower_outer(FLAT_STRIP, 2.0)


@given(canonical_contours())
def test_style_similarity_equivariance(c):
    t = {"angle_deg": 21.0, "scale_factor": 1.5, "tx": 120.0, "ty": -40.0}
    moved = canonical_contour(similarity_points(c.points, **t))
    h = 0.3 * distance(c.points[0], c.points[8])
    direct = similarity_points(style_basic(c, h).vertices, **t)
    routed = style_basic(moved, h * t["scale_factor"]).vertices
    for a, b in zip(direct, routed):
        assert a == pytest.approx(b, abs=1e-9 * max(1.0, abs(a[0]), abs(a[1])))


def test_thickness_for():
    assert thickness_for(labels(), 10.0) == ThicknessProfile(
        h=3.5, h_lower_outer=3.5, h_lower_inner=3.5 / 3.0)
    big = thickness_for(labels(size=SizeLabel.BIG), 10.0)
    assert big.h == pytest.approx(2.5)
    assert big.h_lower_inner == pytest.approx(2.5 / 3.0)
    assert big.h < thickness_for(labels(), 10.0).h


def test_thickness_profile_validation():
    with pytest.raises(BadConfig):
        ThicknessProfile(h=0.0, h_lower_outer=1.0, h_lower_inner=1.0)


def test_style_config_validation():
    with pytest.raises(BadConfig):
        StyleConfig(wing_angle_deg=90.0)
    with pytest.raises(BadConfig):
        StyleConfig(wing_length_ratio=0.0)
    with pytest.raises(BadConfig):
        StyleConfig(k_normal=-1.0)
