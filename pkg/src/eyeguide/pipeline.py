"""Frame-level composition: extract, classify, recommend, build polygons.

This is the single code path behind the CLI and the streaming service, so
both deliver identical guidance for identical frames.  Per-eye output comes
back in source image coordinates; polygons built on a reflected canonical
contour are mapped back through the recorded transform.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .config import EngineConfig, default_engine_config
from .contours import EyeContour, FaceMeshFrame, canonicalize, extract_eye_contours, uncanonicalize
from .features import AnalysisResult, EyeAnalysis, analyze
from .recommend import Recommendation, recommend
from .styles import (GuidancePolygon, StyleId, merge_inner_basic,
                     merge_outer_wing, style_basic, style_lower_inner,
                     style_lower_outer, style_with_wing, wing_point)


@dataclass(frozen=True)
class EyeGuidance:
    side: str
    contour: tuple
    analysis: EyeAnalysis
    recommendation: Recommendation
    polygons: tuple[GuidancePolygon, ...]
    fallback_used: bool


@dataclass(frozen=True)
class FrameGuidance:
    t: int
    image_w: int
    image_h: int
    left: EyeGuidance
    right: EyeGuidance
    analysis: AnalysisResult

    @property
    def fallback_used(self) -> bool:
        return self.left.fallback_used or self.right.fallback_used


def build_eye_polygons(c: EyeContour, rec: Recommendation,
                       style_cfg) -> tuple[tuple[GuidancePolygon, ...], bool]:
    """Construct and merge the recommended polygons on a canonical contour.

    A winged upper fuses with a lower-outer band through the wing point; a
    plain basic upper fuses with a lower-inner band through the fitted cross
    point.  Other combinations stay separate rings.
    """
    h = rec.thickness.h
    fallback = False
    if rec.wing is not None:
        upper = style_with_wing(c, h, rec.wing, style_cfg)
        e = wing_point(c, rec.wing, style_cfg)
    else:
        upper = style_basic(c, h)
        e = None

    lower = None
    if rec.lower == StyleId.LOWER_OUTER:
        lower = style_lower_outer(c, rec.thickness.h_lower_outer)
    elif rec.lower == StyleId.LOWER_INNER:
        lower = style_lower_inner(c, rec.thickness.h_lower_inner)

    if lower is None:
        return (upper,), fallback
    if rec.wing is not None and rec.lower == StyleId.LOWER_OUTER:
        return (merge_outer_wing(upper, lower, e),), fallback
    if rec.wing is None and rec.lower == StyleId.LOWER_INNER:
        result = merge_inner_basic(upper, lower, c, h)
        return (result.polygon,), result.fallback_used
    return (upper, lower), fallback


def guide_frame(frame: FaceMeshFrame, cfg: EngineConfig | None = None,
                style_overrides: dict | None = None,
                frozen: dict | None = None) -> FrameGuidance:
    """Run the full pipeline on one frame.

    ``style_overrides`` can force the wing or lower style ({"wing": StyleId
    or None, "lower": StyleId or None}); ``frozen`` supplies per-side frozen
    recommendations and labels so geometry tracks the live contour while the
    styling decision stays fixed.
    """
    cfg = cfg or default_engine_config()
    left, right = extract_eye_contours(frame, cfg.index_map)
    analysis = analyze(left, right, cfg.classifier)

    def one(side: str, contour: EyeContour, eye: EyeAnalysis) -> EyeGuidance:
        canonical = canonicalize(contour)
        if frozen is not None:
            rec = frozen[side]["recommendation"]
            eye_out = EyeAnalysis(features=eye.features,
                                  labels=frozen[side]["labels"])
        else:
            rec = recommend(eye.labels, eye.features.height, cfg.rules, cfg.style)
            eye_out = eye
        if style_overrides:
            updates = {}
            if "wing" in style_overrides:
                updates["wing"] = style_overrides["wing"]
            if "lower" in style_overrides:
                updates["lower"] = style_overrides["lower"]
            if updates:
                rec = replace(rec, **updates)
        polygons, fallback = build_eye_polygons(canonical, rec, cfg.style)
        mapped = tuple(GuidancePolygon(styles=p.styles,
                                       vertices=uncanonicalize(p.vertices, canonical))
                       for p in polygons)
        original = tuple(canonical.original_point(i) for i in range(16))
        return EyeGuidance(side=side, contour=original, analysis=eye_out,
                           recommendation=rec, polygons=mapped, fallback_used=fallback)

    return FrameGuidance(t=frame.timestamp_ms, image_w=frame.width, image_h=frame.height,
                         left=one("left", left, analysis.left),
                         right=one("right", right, analysis.right),
                         analysis=analysis)


def eye_guidance_dict(eye: EyeGuidance) -> dict:
    f = eye.analysis.features
    labels = eye.analysis.labels
    return {
        "contour": [[p[0], p[1]] for p in eye.contour],
        "features": {
            "width": f.width,
            "height": f.height,
            "aspect_ratio": f.aspect_ratio,
            "alpha_deg": f.alpha_deg,
            "beta_deg": f.beta_deg,
        },
        "labels": {
            "size": labels.size.value,
            "turn": labels.turn.value,
            "spacing": labels.spacing.value,
        },
        "style": eye.recommendation.style_names,
        "thickness": {
            "h": eye.recommendation.thickness.h,
            "h_lower_outer": eye.recommendation.thickness.h_lower_outer,
            "h_lower_inner": eye.recommendation.thickness.h_lower_inner,
        },
        "rationale": [list(pair) for pair in eye.recommendation.rationale],
        "polygons": [{"style": p.name,
                      "vertices": [[v[0], v[1]] for v in p.vertices]}
                     for p in eye.polygons],
    }


def guidance_document(g: FrameGuidance) -> dict:
    """JSON-ready guidance for one frame, shared by CLI render and service."""
    return {
        "t": g.t,
        "image": {"w": g.image_w, "h": g.image_h},
        "fallback_used": g.fallback_used,
        "eyes": {
            "left": eye_guidance_dict(g.left),
            "right": eye_guidance_dict(g.right),
        },
        "spacing": {
            "d_e": g.analysis.spacing.d_e,
            "d_avg": g.analysis.spacing.d_avg,
            "label": g.analysis.spacing_label.value,
        },
    }


def classification_report(analysis: AnalysisResult) -> dict:
    """JSON-ready classification summary for a contour pair."""

    def one(eye: EyeAnalysis) -> dict:
        f = eye.features
        return {
            "width": f.width,
            "height": f.height,
            "aspect_ratio": f.aspect_ratio,
            "alpha_deg": f.alpha_deg,
            "beta_deg": f.beta_deg,
            "size": eye.labels.size.value,
            "turn": eye.labels.turn.value,
        }

    return {
        "eyes": {"left": one(analysis.left), "right": one(analysis.right)},
        "spacing": {
            "d_e": analysis.spacing.d_e,
            "d_avg": analysis.spacing.d_avg,
            "spacing": analysis.spacing_label.value,
        },
    }
