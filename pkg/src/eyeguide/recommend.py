"""Label-driven style recommendation.

The rule table maps each label family to a styling decision:

* size picks the upper thickness policy (the upper style is always Basic)
* turn picks the wing variant
* spacing picks the lower style, or none

Tables are total over their label families; loading an incomplete table
raises, naming the missing labels.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from importlib import resources

from .errors import FixtureError, IncompleteRules, UnknownStyle
from .features import EyeShapeLabels, SizeLabel, SpacingLabel, TurnLabel
from .styles import StyleConfig, StyleId, ThicknessProfile, WING_STYLES


class ThicknessPolicy(str, Enum):
    NORMAL = "normal"
    REDUCED = "reduced"


@dataclass(frozen=True)
class RecommendationRules:
    size_rule: dict[SizeLabel, ThicknessPolicy]
    turn_rule: dict[TurnLabel, StyleId]
    spacing_rule: dict[SpacingLabel, StyleId | None]

    def __post_init__(self):
        missing = [l.value for l in SizeLabel if l not in self.size_rule]
        missing += [l.value for l in TurnLabel if l not in self.turn_rule]
        missing += [l.value for l in SpacingLabel if l not in self.spacing_rule]
        if missing:
            raise IncompleteRules(missing)
        for style in self.turn_rule.values():
            if style not in WING_STYLES:
                raise UnknownStyle(f"turn rule must pick a wing variant, not {style}")
        for style in self.spacing_rule.values():
            if style is not None and style not in (StyleId.LOWER_INNER, StyleId.LOWER_OUTER):
                raise UnknownStyle(f"spacing rule must pick a lower style, not {style}")


@dataclass(frozen=True)
class Recommendation:
    """Styles plus concrete thickness for one eye, with per-label rationale."""

    upper: StyleId
    wing: StyleId | None
    lower: StyleId | None
    thickness: ThicknessProfile
    policy: ThicknessPolicy
    rationale: tuple[tuple[str, str], ...]

    @property
    def style_names(self) -> list[str]:
        names = [self.upper.value]
        if self.wing is not None:
            names.append(self.wing.value)
        if self.lower is not None:
            names.append(self.lower.value)
        return names


def default_rules() -> RecommendationRules:
    text = resources.files("eyeguide.data").joinpath("rules.json").read_text()
    return rules_from_dict(json.loads(text))


def load_rules(path) -> RecommendationRules:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as e:
        raise FixtureError(f"rules file is not valid JSON at byte {e.pos}: {e.msg}") from e
    except OSError as e:
        raise FixtureError(f"cannot read rules file: {e}") from e
    return rules_from_dict(doc)


def _parse_enum(cls, raw, what: str):
    try:
        return cls(raw)
    except ValueError:
        raise UnknownStyle(f"unknown {what}: {raw!r}") from None


def rules_from_dict(doc) -> RecommendationRules:
    if not isinstance(doc, dict):
        raise FixtureError("rule table must be a JSON object")
    size = {}
    for key, val in (doc.get("size") or {}).items():
        size[_parse_enum(SizeLabel, key, "size label")] = \
            _parse_enum(ThicknessPolicy, val, "thickness policy")
    turn = {}
    for key, val in (doc.get("turn") or {}).items():
        turn[_parse_enum(TurnLabel, key, "turn label")] = \
            _parse_enum(StyleId, val, "style")
    spacing = {}
    for key, val in (doc.get("spacing") or {}).items():
        spacing[_parse_enum(SpacingLabel, key, "spacing label")] = \
            None if val is None else _parse_enum(StyleId, val, "style")
    return RecommendationRules(size_rule=size, turn_rule=turn, spacing_rule=spacing)


def recommend(labels: EyeShapeLabels, eye_height: float,
              rules: RecommendationRules | None = None,
              style_cfg: StyleConfig | None = None) -> Recommendation:
    """Deterministic lookup of the rule table for one eye's labels."""
    rules = rules or default_rules()
    style_cfg = style_cfg or StyleConfig()
    policy = rules.size_rule[labels.size]
    wing = rules.turn_rule[labels.turn]
    lower = rules.spacing_rule[labels.spacing]
    k = style_cfg.k_big if policy == ThicknessPolicy.REDUCED else style_cfg.k_normal
    thickness = ThicknessProfile.from_upper(k * eye_height)
    rationale = (
        (f"size={labels.size.value}", f"upper=basic thickness={policy.value}"),
        (f"turn={labels.turn.value}", f"wing={wing.value}"),
        (f"spacing={labels.spacing.value}",
         f"lower={lower.value if lower is not None else 'none'}"),
    )
    return Recommendation(upper=StyleId.BASIC, wing=wing, lower=lower,
                          thickness=thickness, policy=policy, rationale=rationale)
