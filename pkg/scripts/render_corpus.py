"""Render guidance for a grid of random synthetic eye contours.

Usage: python3 scripts/render_corpus.py [out.svg] [n] [seed]
Produces one SVG contact sheet for visually checking polygon construction
across the sampled shape range (aspect ratio 2-4, corner angles 5-35 deg).
Contours whose construction raises a documented geometry error are drawn as
outlines only and labelled with the error name.
"""

from __future__ import annotations

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from eyeguide.contours import canonicalize
from eyeguide.errors import EngineError
from eyeguide.features import ClassifierConfig, analyze
from eyeguide.pipeline import build_eye_polygons
from eyeguide.recommend import recommend
from eyeguide.styles import StyleConfig
from eyeguide.svg import FILL, FILL_OPACITY
from eyeguide.synth import random_contours

CELL = 140.0
COLS = 10


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else "corpus.svg"
    n = int(sys.argv[2]) if len(sys.argv) > 2 else 100
    seed = int(sys.argv[3]) if len(sys.argv) > 3 else 5
    classifier = ClassifierConfig()
    style_cfg = StyleConfig()

    rows = (n + COLS - 1) // COLS
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" '
             f'viewBox="0 0 {COLS * CELL:.0f} {rows * CELL:.0f}">']
    for i, raw in enumerate(random_contours(n, seed=seed)):
        c = canonicalize(raw)
        analysis = analyze(c, c, classifier)
        eye = analysis.left
        cx = (i % COLS) * CELL + 10.0
        cy = (i // COLS) * CELL + CELL / 2.0
        # normalize each contour into its cell: width -> CELL - 20
        s = (CELL - 20.0) / eye.features.width
        x0, y0 = c.points[0]

        def place(p):
            return (cx + (p[0] - x0) * s, cy + (p[1] - y0) * s)

        outline = " ".join(f"{x:.1f},{y:.1f}" for x, y in map(place, c.points))
        parts.append(f'<polygon points="{outline}" fill="none" '
                     f'stroke="#888" stroke-width="0.5"/>')
        try:
            rec = recommend(eye.labels, eye.features.height, style_cfg=style_cfg)
            polygons, _ = build_eye_polygons(c, rec, style_cfg)
        except EngineError as e:
            parts.append(f'<text x="{cx:.1f}" y="{cy + CELL / 2 - 6:.1f}" '
                         f'font-size="8">{type(e).__name__}</text>')
            continue
        for polygon in polygons:
            ring = " ".join(f"{x:.1f},{y:.1f}"
                            for x, y in map(place, polygon.vertices))
            parts.append(f'<polygon points="{ring}" fill="{FILL}" '
                         f'fill-opacity="{FILL_OPACITY}"/>')
        label = f"a={eye.features.aspect_ratio:.2f} {eye.labels.size.value}"
        parts.append(f'<text x="{cx:.1f}" y="{cy + CELL / 2 - 6:.1f}" '
                     f'font-size="8">{label}</text>')
    parts.append("</svg>")
    with open(out, "w", encoding="utf-8") as fh:
        fh.write("\n".join(parts) + "\n")
    print(f"wrote {out} ({n} contours)")


if __name__ == "__main__":
    main()
