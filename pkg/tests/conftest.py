import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from eyeguide.contours import (EyeContour, Side, default_index_map,
                               extract_eye_contours, load_fixture)
from eyeguide.geometry import MirrorTransform

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "fixtures")
GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "golden")


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURE_DIR, name)


def golden_path(name: str) -> str:
    return os.path.join(GOLDEN_DIR, name)


def load_frames(name: str):
    _, _, frames = load_fixture(fixture_path(name))
    return frames


def fixture_contours(name: str, frame_index: int = 0):
    frames = load_frames(name)
    return extract_eye_contours(frames[frame_index], default_index_map())


def canonical_contour(points, side: Side = Side.LEFT) -> EyeContour:
    """Wrap raw canonical-frame points for direct construction tests."""
    return EyeContour(points=tuple(points), side=side, canonical=True,
                      transform=MirrorTransform.identity())


@pytest.fixture
def e30():
    """The 30-wide parabolic eye: width 30, peaks 5.5 and 4.5, corners on y=0."""
    from eyeguide.synth import parabolic_contour_from_peaks
    return parabolic_contour_from_peaks(30.0, 5.5, 4.5)


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    outcome = "PASS" if report.passed else "FAIL"
    sys.stderr.write(f"[ACCEPTANCE] {name}: {outcome}\n")
