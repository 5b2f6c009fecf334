"""Eyeliner guidance engine.

Classifies eye shape from 16-point face-mesh eye contours and synthesizes
eyeliner guidance polygons, with a batch CLI and a streaming session service.
"""

from .config import EngineConfig, default_engine_config, load_engine_config
from .contours import (EyeContour, EyeIndexMap, FaceMeshFrame, Side,
                       canonicalize, default_index_map, extract_eye_contours,
                       load_fixture, load_index_map, uncanonicalize)
from .features import (AnalysisResult, ClassifierConfig, EyeFeatures,
                       EyeShapeLabels, SizeLabel, SpacingFeatures, SpacingLabel,
                       TurnLabel, analyze, aspect_ratio, classify_size,
                       classify_spacing, classify_turn, corner_angles,
                       eye_height, eye_width, spacing_features)
from .pipeline import FrameGuidance, guidance_document, guide_frame
from .recommend import (Recommendation, RecommendationRules, default_rules,
                        load_rules, recommend)
from .service import GuidanceFrame, Session, SessionManager, SessionState
from .styles import (GuidancePolygon, StyleConfig, StyleId, ThicknessProfile,
                     merge_inner_basic, merge_outer_wing, offset_points,
                     style_basic, style_lower_inner, style_lower_outer,
                     style_with_wing, thickness_for, wing_point)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
