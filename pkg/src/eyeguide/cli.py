"""Command-line interface: analyze fixtures, render guidance, serve sessions.

Exit codes: 0 success, 2 invalid input or configuration, 3 detection failure
on the requested frame, 4 unwritable output path, 5 service bind failure.
"""

from __future__ import annotations

import json
import socket
import sys

import click

from .config import load_engine_config
from .contours import load_fixture
from .errors import (BadConfig, DegenerateContour, EngineError, FixtureError,
                     HeightZero, IndexOutOfRange)
from .pipeline import classification_report, guidance_document, guide_frame
from .styles import StyleId
from .svg import render_svg

EXIT_INVALID_INPUT = 2
EXIT_DETECTION = 3
EXIT_UNWRITABLE = 4
EXIT_BIND = 5

STYLE_CHOICES = ("basic", "winged", "drop", "extend",
                 "lower-inner", "lower-outer", "no-lower")


def _fail(code: int, message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load_all(fixture_path, config_path, rules_path):
    try:
        cfg = load_engine_config(config_path, rules_path)
    except (BadConfig, FixtureError, EngineError) as e:
        _fail(EXIT_INVALID_INPUT, str(e))
    try:
        _, _, frames = load_fixture(fixture_path)
    except FixtureError as e:
        _fail(EXIT_INVALID_INPUT, str(e))
    return cfg, frames


def _pick_frame(frames, index):
    if index < 0 or index >= len(frames):
        _fail(EXIT_INVALID_INPUT, f"frame {index} out of range, fixture has {len(frames)}")
    return frames[index]


def _style_overrides(styles: tuple[str, ...]) -> dict:
    overrides: dict = {}
    for s in styles:
        if s == "basic":
            overrides["wing"] = None
        elif s in ("winged", "drop", "extend"):
            overrides["wing"] = StyleId(s)
        elif s == "lower-inner":
            overrides["lower"] = StyleId.LOWER_INNER
        elif s == "lower-outer":
            overrides["lower"] = StyleId.LOWER_OUTER
        elif s == "no-lower":
            overrides["lower"] = None
    return overrides


@click.group()
def main():
    """Eyeliner guidance from face-mesh landmark fixtures."""


@main.command()
@click.argument("fixture", type=click.Path())
@click.option("--config", "config_path", type=click.Path(), default=None,
              help="Configuration JSON overriding the defaults.")
@click.option("--rules", "rules_path", type=click.Path(), default=None,
              help="Rule table JSON replacing the default table.")
@click.option("--frame", "frame_index", type=int, default=0, show_default=True,
              help="Frame index inside the fixture.")
@click.option("--json", "as_json", is_flag=True, help="Emit the report as JSON.")
def analyze(fixture, config_path, rules_path, frame_index, as_json):
    """Classify the eye pair in FIXTURE and print the report."""
    cfg, frames = _load_all(fixture, config_path, rules_path)
    frame = _pick_frame(frames, frame_index)
    try:
        guidance = guide_frame(frame, cfg)
    except (DegenerateContour, HeightZero, IndexOutOfRange) as e:
        _fail(EXIT_DETECTION, f"detection failed: {e}")
    report = classification_report(guidance.analysis)
    if as_json:
        click.echo(json.dumps(report, indent=2, sort_keys=True))
        return
    for side in ("left", "right"):
        eye = report["eyes"][side]
        click.echo(f"{side} eye:")
        click.echo(f"  width        {eye['width']:.3f} px")
        click.echo(f"  height       {eye['height']:.3f} px")
        click.echo(f"  aspect ratio {eye['aspect_ratio']:.3f}")
        click.echo(f"  alpha        {eye['alpha_deg']:.3f} deg")
        click.echo(f"  beta         {eye['beta_deg']:.3f} deg")
        click.echo(f"  size         {eye['size']}")
        click.echo(f"  turn         {eye['turn']}")
    sp = report["spacing"]
    click.echo("pair:")
    click.echo(f"  d_e          {sp['d_e']:.3f} px")
    click.echo(f"  d_avg        {sp['d_avg']:.3f} px")
    click.echo(f"  spacing      {sp['spacing']}")


@main.command()
@click.argument("fixture", type=click.Path())
@click.option("--config", "config_path", type=click.Path(), default=None,
              help="Configuration JSON overriding the defaults.")
@click.option("--rules", "rules_path", type=click.Path(), default=None,
              help="Rule table JSON replacing the default table.")
@click.option("--frame", "frame_index", type=int, default=0, show_default=True,
              help="Frame index inside the fixture.")
@click.option("--style", "styles", multiple=True,
              type=click.Choice(STYLE_CHOICES),
              help="Force a style instead of the recommended one; repeatable.")
@click.option("--out", "out_path", type=click.Path(), default=None,
              help="Write the SVG here instead of standard output.")
@click.option("--contours", is_flag=True, help="Include recognized contours in the SVG.")
@click.option("--json", "as_json", is_flag=True,
              help="Emit the guidance document as JSON instead of SVG.")
def render(fixture, config_path, rules_path, frame_index, styles, out_path,
           contours, as_json):
    """Render guidance polygons for FIXTURE as an SVG overlay."""
    cfg, frames = _load_all(fixture, config_path, rules_path)
    frame = _pick_frame(frames, frame_index)
    try:
        guidance = guide_frame(frame, cfg, style_overrides=_style_overrides(styles))
    except (DegenerateContour, HeightZero, IndexOutOfRange) as e:
        _fail(EXIT_DETECTION, f"detection failed: {e}")
    if as_json:
        payload = json.dumps(guidance_document(guidance), indent=2, sort_keys=True)
    else:
        payload = render_svg(guidance, include_contours=contours)
    if out_path is None:
        click.echo(payload, nl=False)
        return
    try:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(payload)
    except OSError as e:
        _fail(EXIT_UNWRITABLE, f"cannot write {out_path}: {e}")


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--config", "config_path", type=click.Path(), default=None,
              help="Configuration JSON overriding the defaults.")
@click.option("--rules", "rules_path", type=click.Path(), default=None,
              help="Rule table JSON replacing the default table.")
@click.option("--static", "static_dir", type=click.Path(), default=None,
              help="Directory with a client bundle to host at /app.")
def serve(host, port, config_path, rules_path, static_dir):
    """Serve guidance sessions over HTTP and WebSocket."""
    try:
        cfg = load_engine_config(config_path, rules_path)
    except (BadConfig, FixtureError, EngineError) as e:
        _fail(EXIT_INVALID_INPUT, str(e))
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.bind((host, port))
    except OSError as e:
        probe.close()
        _fail(EXIT_BIND, f"cannot bind {host}:{port}: {e}")
    probe.close()

    import uvicorn

    from .server import create_app

    try:
        app = create_app(cfg, static_dir=static_dir)
    except BadConfig as e:
        _fail(EXIT_INVALID_INPUT, str(e))
    uvicorn.run(app, host=host, port=port, log_level="warning")


if __name__ == "__main__":
    main()
