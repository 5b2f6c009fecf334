"""Eye measurement and rule-based shape classification.

The classifier reads three families of labels off a contour pair:

* size from the aspect ratio (width over height)
* turn from the two corner angles at the outer corner
* spacing from the inter-eye gap relative to mean eye width

All thresholds live in ClassifierConfig and default to the published rule
values (2.75 and 3.00 for size, 0.95 and 1.05 for spacing).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .contours import EyeContour, canonicalize
from .errors import BadConfig, HeightZero
from .geometry import (angle_between_deg, distance, point_line_distance, sub)


class SizeLabel(str, Enum):
    SMALL = "small"
    AVERAGE = "average"
    BIG = "big"


class TurnLabel(str, Enum):
    UPTURNED = "upturned"
    DOWNTURNED = "downturned"


class SpacingLabel(str, Enum):
    CLOSE = "close"
    AVERAGE = "average"
    OPEN = "open"


@dataclass(frozen=True)
class ClassifierConfig:
    a_low: float = 2.75
    a_high: float = 3.00
    spacing_lo: float = 0.95
    spacing_hi: float = 1.05
    turn_tiebreak: TurnLabel = TurnLabel.UPTURNED

    def __post_init__(self):
        if not (0 < self.a_low <= self.a_high):
            raise BadConfig("size thresholds must satisfy 0 < a_low <= a_high")
        if not (0 < self.spacing_lo <= self.spacing_hi):
            raise BadConfig("spacing thresholds must satisfy 0 < lo <= hi")
        if not isinstance(self.turn_tiebreak, TurnLabel):
            raise BadConfig("turn_tiebreak must be a TurnLabel")


@dataclass(frozen=True)
class EyeFeatures:
    width: float
    height: float
    aspect_ratio: float
    alpha_deg: float
    beta_deg: float

    def __post_init__(self):
        if not (self.width > 0 and self.height > 0 and self.aspect_ratio > 0):
            raise ValueError("eye features must be strictly positive")
        for a in (self.alpha_deg, self.beta_deg):
            if not (0.0 <= a < 90.0):
                raise ValueError("corner angles must lie in [0, 90) degrees")


@dataclass(frozen=True)
class SpacingFeatures:
    d_e: float
    d_avg: float

    @property
    def ratio(self) -> float:
        return self.d_e / self.d_avg


@dataclass(frozen=True)
class EyeShapeLabels:
    size: SizeLabel
    turn: TurnLabel
    spacing: SpacingLabel


@dataclass(frozen=True)
class EyeAnalysis:
    features: EyeFeatures
    labels: EyeShapeLabels


@dataclass(frozen=True)
class AnalysisResult:
    left: EyeAnalysis
    right: EyeAnalysis
    spacing: SpacingFeatures
    spacing_label: SpacingLabel


def _require_canonical(c: EyeContour):
    if not c.canonical:
        raise ValueError("contour must be canonicalized first")


def eye_width(c: EyeContour) -> float:
    """Corner-to-corner distance."""
    _require_canonical(c)
    return distance(c.points[0], c.points[8])


def eye_height(c: EyeContour) -> float:
    """Largest perpendicular lid offsets from the corner axis, upper plus lower."""
    _require_canonical(c)
    p0, p8 = c.points[0], c.points[8]
    upper = max(point_line_distance(c.points[i], p0, p8) for i in range(1, 8))
    lower = max(point_line_distance(c.points[i], p0, p8) for i in range(9, 16))
    return upper + lower


def aspect_ratio(c: EyeContour) -> float:
    h = eye_height(c)
    if h == 0.0:
        raise HeightZero("flat contour has no aspect ratio")
    return eye_width(c) / h


def corner_angles(c: EyeContour) -> tuple[float, float]:
    """Unsigned angles at the outer corner, in degrees.

    alpha opens between the rays to the upper-lid peak landmark p4 and to the
    inner corner; beta uses the lower-lid landmark p12 instead.
    """
    _require_canonical(c)
    p8 = c.points[8]
    to_inner = sub(c.points[0], p8)
    alpha = angle_between_deg(sub(c.points[4], p8), to_inner)
    beta = angle_between_deg(sub(c.points[12], p8), to_inner)
    return alpha, beta


def compute_features(c: EyeContour) -> EyeFeatures:
    c = canonicalize(c)
    alpha, beta = corner_angles(c)
    return EyeFeatures(width=eye_width(c), height=eye_height(c),
                       aspect_ratio=aspect_ratio(c), alpha_deg=alpha, beta_deg=beta)


def classify_size(a: float, cfg: ClassifierConfig) -> SizeLabel:
    """Size from aspect ratio; both thresholds are inclusive on the average side."""
    if a < cfg.a_low:
        return SizeLabel.BIG
    if a > cfg.a_high:
        return SizeLabel.SMALL
    return SizeLabel.AVERAGE


def classify_turn(alpha_deg: float, beta_deg: float, cfg: ClassifierConfig) -> TurnLabel:
    if alpha_deg > beta_deg:
        return TurnLabel.DOWNTURNED
    if alpha_deg < beta_deg:
        return TurnLabel.UPTURNED
    return cfg.turn_tiebreak


def spacing_features(left: EyeContour, right: EyeContour) -> SpacingFeatures:
    """Inner-corner gap and mean eye width, in source image coordinates."""
    d_e = distance(left.original_inner_corner, right.original_inner_corner)
    d_avg = (eye_width(canonicalize(left)) + eye_width(canonicalize(right))) / 2.0
    if d_avg == 0.0:
        raise HeightZero("zero mean eye width")
    return SpacingFeatures(d_e=d_e, d_avg=d_avg)


def classify_spacing(sp: SpacingFeatures, cfg: ClassifierConfig) -> SpacingLabel:
    """Spacing flips strictly outside the [lo, hi] band around a unit ratio."""
    r = sp.ratio
    if r > cfg.spacing_hi:
        return SpacingLabel.OPEN
    if r < cfg.spacing_lo:
        return SpacingLabel.CLOSE
    return SpacingLabel.AVERAGE


def analyze(left: EyeContour, right: EyeContour,
            cfg: ClassifierConfig | None = None) -> AnalysisResult:
    """Measure and label both eyes; the spacing label is shared."""
    cfg = cfg or ClassifierConfig()
    left_c = canonicalize(left)
    right_c = canonicalize(right)
    sp = spacing_features(left_c, right_c)
    spacing_label = classify_spacing(sp, cfg)

    def one(c: EyeContour) -> EyeAnalysis:
        f = compute_features(c)
        labels = EyeShapeLabels(size=classify_size(f.aspect_ratio, cfg),
                                turn=classify_turn(f.alpha_deg, f.beta_deg, cfg),
                                spacing=spacing_label)
        return EyeAnalysis(features=f, labels=labels)

    return AnalysisResult(left=one(left_c), right=one(right_c),
                         spacing=sp, spacing_label=spacing_label)
