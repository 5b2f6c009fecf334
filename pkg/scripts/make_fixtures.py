"""Regenerate the committed landmark fixtures under tests/fixtures/.

Fixture geometry uses dyadic pixel coordinates in a 512x512 image, so the
normalized landmarks round-trip through JSON and pixel scaling without any
floating point drift and the intended aspect ratios are exact, including the
pair that sits exactly on the size boundary.
"""

from __future__ import annotations

import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from eyeguide.contours import FaceMeshFrame
from eyeguide.synth import eye_pair_frame

OUT_DIR = os.path.join(os.path.dirname(__file__), "..", "tests", "fixtures")

# width, upper peak, lower peak, inner-corner gap per fixture:
#   e30_pair      aspect 30/10 = 3.00 exactly (inclusive boundary), downturned, open
#   big_round     aspect 25/10 = 2.50, upturned, average spacing
#   small_long    aspect 32/10 = 3.20, downturned, close-set
FIXTURES = {
    "e30_pair.json": [(30.0, 5.5, 4.5, 32.0, 0)],
    "big_round.json": [(25.0, 4.5, 5.5, 25.0, 0)],
    "small_long.json": [(32.0, 5.5, 4.5, 28.0, 0)],
    # same inner corners in all frames; the width change flips the size
    # label from average (aspect 2.8) to small (aspect 3.2) and the spacing
    # ratio from 30/28 (open) to 30/32 (close); the last frame doubles the
    # eye so live thickness would differ from a frozen one
    "boundary_cross.json": [(28.0, 5.5, 4.5, 30.0, 0),
                            (32.0, 5.5, 4.5, 30.0, 33),
                            (64.0, 11.0, 9.0, 30.0, 66)],
}


def frame_doc(frame: FaceMeshFrame) -> dict:
    return {"t": frame.timestamp_ms,
            "landmarks": [[x, y] for x, y in frame.landmarks]}


def main():
    os.makedirs(OUT_DIR, exist_ok=True)
    for name, specs in FIXTURES.items():
        frames = [eye_pair_frame(w, u, l, gap, t=t) for w, u, l, gap, t in specs]
        doc = {"image": {"w": frames[0].width, "h": frames[0].height},
               "frames": [frame_doc(f) for f in frames]}
        path = os.path.join(OUT_DIR, name)
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh)
            fh.write("\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
