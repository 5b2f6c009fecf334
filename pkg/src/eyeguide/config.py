"""Engine configuration: classifier thresholds, style parameters, rule table.

Configuration documents are flat JSON.  Classifier thresholds sit at the top
level; style parameters, the rule table, the eye index map, and the assumed
image size live under their own sections.  Defaults can also be supplied as
``config.json`` and ``rules.json`` inside the directory named by the
EYEGUIDE_CONFIG_DIR environment variable.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, replace

from .contours import EyeIndexMap, default_index_map, index_map_from_dict
from .errors import BadConfig, FixtureError
from .features import ClassifierConfig, TurnLabel
from .recommend import RecommendationRules, default_rules, load_rules, rules_from_dict
from .styles import StyleConfig

ENV_CONFIG_DIR = "EYEGUIDE_CONFIG_DIR"

CLASSIFIER_KEYS = ("a_low", "a_high", "spacing_lo", "spacing_hi", "turn_tiebreak")
STYLE_KEYS = ("k_normal", "k_big", "wing_angle_deg", "wing_length_ratio")
SECTION_KEYS = ("style", "rules", "index_map", "image")


@dataclass(frozen=True)
class EngineConfig:
    classifier: ClassifierConfig
    style: StyleConfig
    rules: RecommendationRules
    index_map: EyeIndexMap
    image_w: int = 640
    image_h: int = 480


def default_engine_config() -> EngineConfig:
    return EngineConfig(classifier=ClassifierConfig(), style=StyleConfig(),
                        rules=default_rules(), index_map=default_index_map())


def _number(raw, key: str) -> float:
    if isinstance(raw, bool) or not isinstance(raw, (int, float)):
        raise BadConfig(f"{key} must be a number, got {raw!r}")
    return float(raw)


def apply_overrides(base: EngineConfig, doc: dict) -> EngineConfig:
    """Overlay a configuration document onto an existing configuration.

    Unknown keys raise BadConfig rather than being ignored, so typos in
    threshold names fail loudly.
    """
    if not isinstance(doc, dict):
        raise BadConfig("configuration must be a JSON object")
    unknown = set(doc) - set(CLASSIFIER_KEYS) - set(SECTION_KEYS)
    if unknown:
        raise BadConfig(f"unknown configuration keys: {sorted(unknown)}")

    classifier = base.classifier
    updates = {}
    for key in ("a_low", "a_high", "spacing_lo", "spacing_hi"):
        if key in doc:
            updates[key] = _number(doc[key], key)
    if "turn_tiebreak" in doc:
        try:
            updates["turn_tiebreak"] = TurnLabel(doc["turn_tiebreak"])
        except ValueError:
            raise BadConfig(f"turn_tiebreak must be one of "
                            f"{[l.value for l in TurnLabel]}") from None
    if updates:
        classifier = replace(classifier, **updates)

    style = base.style
    if "style" in doc:
        section = doc["style"]
        if not isinstance(section, dict):
            raise BadConfig("style section must be an object")
        unknown = set(section) - set(STYLE_KEYS)
        if unknown:
            raise BadConfig(f"unknown style keys: {sorted(unknown)}")
        style = replace(style, **{k: _number(v, k) for k, v in section.items()})

    rules = base.rules
    if "rules" in doc:
        try:
            rules = rules_from_dict(doc["rules"])
        except FixtureError as e:
            raise BadConfig(str(e)) from e

    index_map = base.index_map
    if "index_map" in doc:
        try:
            index_map = index_map_from_dict(doc["index_map"])
        except FixtureError as e:
            raise BadConfig(str(e)) from e

    image_w, image_h = base.image_w, base.image_h
    if "image" in doc:
        section = doc["image"]
        if not isinstance(section, dict) or set(section) - {"w", "h"}:
            raise BadConfig("image section must carry only 'w' and 'h'")
        if "w" in section:
            image_w = int(_number(section["w"], "image.w"))
        if "h" in section:
            image_h = int(_number(section["h"], "image.h"))
        if image_w <= 0 or image_h <= 0:
            raise BadConfig("image size must be strictly positive")

    return EngineConfig(classifier=classifier, style=style, rules=rules,
                        index_map=index_map, image_w=image_w, image_h=image_h)


def load_engine_config(config_path=None, rules_path=None) -> EngineConfig:
    """Resolve configuration: package defaults, then env dir, then explicit paths."""
    cfg = default_engine_config()
    env_dir = os.environ.get(ENV_CONFIG_DIR)
    if env_dir:
        env_config = os.path.join(env_dir, "config.json")
        if os.path.exists(env_config):
            cfg = apply_overrides(cfg, _read_json(env_config))
        env_rules = os.path.join(env_dir, "rules.json")
        if os.path.exists(env_rules):
            cfg = replace(cfg, rules=load_rules(env_rules))
    if config_path is not None:
        cfg = apply_overrides(cfg, _read_json(config_path))
    if rules_path is not None:
        cfg = replace(cfg, rules=load_rules(rules_path))
    return cfg


def _read_json(path) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise BadConfig(f"configuration is not valid JSON at byte {e.pos}: {e.msg}") from e
    except OSError as e:
        raise BadConfig(f"cannot read configuration: {e}") from e


def config_echo(cfg: EngineConfig) -> dict:
    """JSON-ready view of a configuration, used by the service handshake."""
    return {
        "classifier": {
            "a_low": cfg.classifier.a_low,
            "a_high": cfg.classifier.a_high,
            "spacing_lo": cfg.classifier.spacing_lo,
            "spacing_hi": cfg.classifier.spacing_hi,
            "turn_tiebreak": cfg.classifier.turn_tiebreak.value,
        },
        "style": {
            "k_normal": cfg.style.k_normal,
            "k_big": cfg.style.k_big,
            "wing_angle_deg": cfg.style.wing_angle_deg,
            "wing_length_ratio": cfg.style.wing_length_ratio,
        },
        "rules": {
            "size": {k.value: v.value for k, v in cfg.rules.size_rule.items()},
            "turn": {k.value: v.value for k, v in cfg.rules.turn_rule.items()},
            "spacing": {k.value: (v.value if v is not None else None)
                        for k, v in cfg.rules.spacing_rule.items()},
        },
        "index_map": {
            "right_eye": list(cfg.index_map.right_eye),
            "left_eye": list(cfg.index_map.left_eye),
        },
        "image": {"w": cfg.image_w, "h": cfg.image_h},
    }


def config_schema() -> dict:
    """Field names, types, and defaults accepted by configuration documents."""
    base = default_engine_config()
    return {
        "top_level": {
            "a_low": {"type": "number", "default": base.classifier.a_low,
                      "doc": "aspect ratios below this label the eye big"},
            "a_high": {"type": "number", "default": base.classifier.a_high,
                       "doc": "aspect ratios above this label the eye small"},
            "spacing_lo": {"type": "number", "default": base.classifier.spacing_lo,
                           "doc": "spacing ratios below this label the pair close-set"},
            "spacing_hi": {"type": "number", "default": base.classifier.spacing_hi,
                           "doc": "spacing ratios above this label the pair open-set"},
            "turn_tiebreak": {"type": "string", "default": base.classifier.turn_tiebreak.value,
                              "enum": [l.value for l in TurnLabel],
                              "doc": "turn label when the corner angles tie"},
        },
        "style": {
            "k_normal": {"type": "number", "default": base.style.k_normal,
                         "doc": "upper thickness as a fraction of eye height"},
            "k_big": {"type": "number", "default": base.style.k_big,
                      "doc": "upper thickness fraction for big eyes"},
            "wing_angle_deg": {"type": "number", "default": base.style.wing_angle_deg,
                               "doc": "winged style lift angle in degrees"},
            "wing_length_ratio": {"type": "number", "default": base.style.wing_length_ratio,
                                  "doc": "wing length as a fraction of eye width"},
        },
        "rules": {"type": "object",
                  "doc": "rule table with size, turn, and spacing sections"},
        "index_map": {"type": "object",
                      "doc": "16 landmark indices per eye, contour order"},
        "image": {"type": "object", "default": {"w": base.image_w, "h": base.image_h},
                  "doc": "assumed image size for streamed frames"},
    }
