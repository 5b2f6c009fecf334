import re

from eyeguide.config import default_engine_config
from eyeguide.pipeline import guide_frame
from eyeguide.svg import render_svg

from conftest import load_frames


def render(name, **kwargs):
    frame = load_frames(name)[0]
    return render_svg(guide_frame(frame, default_engine_config()), **kwargs)


def test_svg_structure():
    svg = render("e30_pair.json")
    assert svg.startswith('<svg xmlns="http://www.w3.org/2000/svg" '
                          'viewBox="0 0 512 512">')
    assert svg.rstrip().endswith("</svg>")
    # one path per polygon: two rings per eye for this fixture
    assert svg.count("<path ") == 4


def test_svg_guidance_color():
    svg = render("small_long.json")
    for path in re.findall(r"<path [^>]*>", svg):
        assert 'fill="#FFA500"' in path
        assert 'fill-opacity="0.6"' in path


def test_svg_three_decimal_vertices():
    svg = render("e30_pair.json")
    for token in re.findall(r"[ML] ([-0-9.]+),([-0-9.]+)", svg):
        for coord in token:
            assert re.fullmatch(r"-?\d+\.\d{3}", coord)


def test_svg_bytes_stable():
    assert render("e30_pair.json") == render("e30_pair.json")


def test_svg_eye_order_left_then_right():
    svg = render("big_round.json")
    eyes = re.findall(r'data-eye="(\w+)"', svg)
    assert eyes == sorted(eyes, key=lambda e: 0 if e == "left" else 1)


def test_svg_optional_contours():
    plain = render("e30_pair.json")
    with_contours = render("e30_pair.json", include_contours=True)
    assert "<polygon " not in plain
    assert with_contours.count('data-role="contour"') == 2
