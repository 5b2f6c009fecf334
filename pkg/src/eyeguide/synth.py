"""Synthetic eye contours and landmark frames for tests and benchmarks.

Contours come from a two-parabola eye model: picking the eye width w and the
two corner angles alpha and beta fixes the lid peaks at u = (w/2) tan(alpha)
and l = (w/2) tan(beta), which makes the aspect ratio exactly
2 / (tan(alpha) + tan(beta)).  Sampling the lids at eight equal x steps puts
the peak landmarks p4 and p12 exactly at mid-width, so the generated corner
angles round-trip through the measurement code.
"""

from __future__ import annotations

import math
import random

from .contours import EyeContour, FaceMeshFrame, Side, default_index_map
from .geometry import MirrorTransform, Point, similarity_points


def parabolic_contour_from_peaks(width: float, upper_peak: float, lower_peak: float,
                                 origin: Point = (0.0, 0.0), side: Side = Side.LEFT,
                                 canonical: bool = True) -> EyeContour:
    """Canonical contour from lid peak heights.

    With dyadic width, peaks, and origin the lid ordinates are exact in
    floating point, which keeps fixture aspect ratios exactly on their
    intended values.
    """
    x0, y0 = origin
    half = width / 2.0

    def lid(x: float, peak: float) -> float:
        return peak * (1.0 - ((x - half) / half) ** 2)

    step = width / 8.0
    upper = [(x0 + step * i, y0 - lid(step * i, upper_peak)) for i in range(9)]
    lower = [(x0 + width - step * j, y0 + lid(width - step * j, lower_peak))
             for j in range(1, 8)]
    points = tuple(upper + lower)
    return EyeContour(points=points, side=side, canonical=canonical,
                      transform=MirrorTransform.identity() if canonical else None)


def parabolic_contour(width: float, alpha_deg: float, beta_deg: float,
                      origin: Point = (0.0, 0.0), side: Side = Side.LEFT,
                      canonical: bool = True) -> EyeContour:
    """Canonical contour with exact corner angles alpha (upper) and beta (lower)."""
    u = (width / 2.0) * math.tan(math.radians(alpha_deg))
    l = (width / 2.0) * math.tan(math.radians(beta_deg))
    return parabolic_contour_from_peaks(width, u, l, origin, side, canonical)


def sample_contour_params(rng: random.Random,
                          aspect_range: tuple[float, float] = (2.0, 4.0),
                          angle_range: tuple[float, float] = (5.0, 35.0),
                          width_range: tuple[float, float] = (20.0, 200.0)):
    """Pick (width, alpha, beta) with the aspect ratio inside aspect_range.

    The coupling a = 2 / (tan(alpha) + tan(beta)) means the angle sum is
    constrained; alpha is drawn first, then beta from the interval that keeps
    both the aspect ratio and the angle bounds satisfied.
    """
    lo_t, hi_t = (math.tan(math.radians(a)) for a in angle_range)
    a_lo, a_hi = aspect_range
    while True:
        alpha = rng.uniform(*angle_range)
        ta = math.tan(math.radians(alpha))
        tb_lo = max(2.0 / a_hi - ta, lo_t)
        tb_hi = min(2.0 / a_lo - ta, hi_t)
        if tb_lo <= tb_hi:
            beta = math.degrees(math.atan(rng.uniform(tb_lo, tb_hi)))
            return rng.uniform(*width_range), alpha, beta


def random_contour(rng: random.Random, *, transform: bool = True,
                   aspect_range: tuple[float, float] = (2.0, 4.0),
                   angle_range: tuple[float, float] = (5.0, 35.0),
                   width_range: tuple[float, float] = (20.0, 200.0)) -> EyeContour:
    """Random eye-shaped contour, optionally rotated and translated.

    The result is returned non-canonical so callers exercise the full
    canonicalization path.
    """
    width, alpha, beta = sample_contour_params(rng, aspect_range, angle_range,
                                               width_range)
    c = parabolic_contour(width, alpha, beta)
    points = c.points
    if transform:
        points = similarity_points(points,
                                   angle_deg=rng.uniform(-30.0, 30.0),
                                   tx=rng.uniform(0.0, 500.0),
                                   ty=rng.uniform(0.0, 500.0),
                                   center=(width / 2.0, 0.0))
    return EyeContour(points=points, side=Side.LEFT, canonical=False)


def random_contours(n: int, seed: int, **kwargs) -> list[EyeContour]:
    rng = random.Random(seed)
    return [random_contour(rng, **kwargs) for _ in range(n)]


def frame_from_eyes(left_points_px, right_points_px, image_w: int, image_h: int,
                    t: int = 0, total: int = 468) -> FaceMeshFrame:
    """Embed two pixel-space eye contours into a face-mesh frame.

    All landmarks outside the two eye rings sit at the image center; the eye
    rings land at the default index positions.
    """
    index_map = default_index_map()
    landmarks = [(0.5, 0.5)] * total
    for indices, pts in ((index_map.left_eye, left_points_px),
                         (index_map.right_eye, right_points_px)):
        for idx, p in zip(indices, pts):
            landmarks[idx] = (p[0] / image_w, p[1] / image_h)
    return FaceMeshFrame(landmarks=tuple(landmarks), width=image_w,
                         height=image_h, timestamp_ms=t)


def eye_pair_frame(width: float, upper_peak: float, lower_peak: float,
                   gap: float, image_w: int = 512, image_h: int = 512,
                   eye_y: float = 240.0, t: int = 0) -> FaceMeshFrame:
    """Symmetric eye pair centred in the image with a given inner-corner gap.

    The subject-left eye sits on the image right; the subject-right eye is its
    mirror image on the image left, so extraction exercises both the identity
    and the reflected canonicalization paths.
    """
    cx = image_w / 2.0
    left = parabolic_contour_from_peaks(width, upper_peak, lower_peak,
                                        origin=(cx + gap / 2.0, eye_y))
    mirror = MirrorTransform(reflect=True, axis_x=cx)
    right_points = mirror.apply_many(left.points)
    return frame_from_eyes(left.points, right_points, image_w, image_h, t=t)
