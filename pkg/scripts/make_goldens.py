"""Regenerate the golden SVG renders under tests/golden/.

Run after any intentional change to fixtures, construction geometry, or the
SVG writer, then review the diff before committing.
"""

from __future__ import annotations

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from eyeguide.config import default_engine_config
from eyeguide.contours import load_fixture
from eyeguide.pipeline import guide_frame
from eyeguide.styles import StyleId
from eyeguide.svg import render_svg

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "..", "tests", "fixtures")
GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "..", "tests", "golden")

RENDERS = [
    ("e30_pair.json", 0, None, "e30_pair.svg"),
    ("big_round.json", 0, None, "big_round.svg"),
    ("small_long.json", 0, None, "small_long.svg"),
    ("boundary_cross.json", 2, None, "boundary_cross_f2.svg"),
    ("e30_pair.json", 0, {"wing": None, "lower": StyleId.LOWER_INNER},
     "e30_pair_inner_merge.svg"),
]


def main():
    os.makedirs(GOLDEN_DIR, exist_ok=True)
    cfg = default_engine_config()
    for fixture, frame_index, overrides, out_name in RENDERS:
        _, _, frames = load_fixture(os.path.join(FIXTURE_DIR, fixture))
        g = guide_frame(frames[frame_index], cfg, style_overrides=overrides)
        svg = render_svg(g)
        path = os.path.join(GOLDEN_DIR, out_name)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(svg)
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
