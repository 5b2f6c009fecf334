"""Byte-stable SVG rendering of guidance polygons.

Vertices are written with three decimal places and elements in a fixed
order (left eye polygons, then right), so rendering the same guidance twice
yields identical bytes.
"""

from __future__ import annotations

from .pipeline import FrameGuidance

FILL = "#FFA500"
FILL_OPACITY = "0.6"
CONTOUR_STROKE = "#FFFFFF"


def _fmt(v: float) -> str:
    return f"{v:.3f}"


def _path(vertices) -> str:
    parts = [f"M {_fmt(vertices[0][0])},{_fmt(vertices[0][1])}"]
    parts += [f"L {_fmt(x)},{_fmt(y)}" for x, y in vertices[1:]]
    return " ".join(parts) + " Z"


def render_svg(guidance: FrameGuidance, include_contours: bool = False) -> str:
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="0 0 {guidance.image_w} {guidance.image_h}">'
    ]
    for eye in (guidance.left, guidance.right):
        if include_contours:
            pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in eye.contour)
            lines.append(f'  <polygon points="{pts}" fill="none" '
                         f'stroke="{CONTOUR_STROKE}" stroke-width="1" '
                         f'data-eye="{eye.side}" data-role="contour"/>')
        for p in eye.polygons:
            lines.append(f'  <path d="{_path(p.vertices)}" fill="{FILL}" '
                         f'fill-opacity="{FILL_OPACITY}" data-eye="{eye.side}" '
                         f'data-style="{p.name}"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
