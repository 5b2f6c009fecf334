/**
 * Canvas drawing for guidance overlays.
 *
 * Drawing goes through a minimal surface interface so tests can record the
 * exact vertices; CanvasRenderingContext2D satisfies it structurally.  The
 * client performs no geometry: every vertex is the service payload mapped
 * through one display transform.
 */

import {
  eyeCropBox,
  mapPoints,
  toCanvas,
  transformFor,
  type DisplayTransform,
} from "./transform.js";
import type { EyeGuidance, GuidanceMessage, Point } from "./wire.js";

export const GUIDANCE_FILL = "#FFA500";
export const GUIDANCE_ALPHA = 0.6;
export const CONTOUR_STROKE = "#FFFFFF";
export const CONTOUR_WIDTH = 1;
export const ZOOM_MARGIN = 0.4;

export interface DrawSurface {
  fillStyle: string | CanvasGradient | CanvasPattern;
  strokeStyle: string | CanvasGradient | CanvasPattern;
  lineWidth: number;
  globalAlpha: number;
  beginPath(): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  closePath(): void;
  fill(): void;
  stroke(): void;
  clearRect(x: number, y: number, w: number, h: number): void;
  save(): void;
  restore(): void;
}

function tracePath(ctx: DrawSurface, vertices: readonly Point[]): void {
  ctx.beginPath();
  vertices.forEach(([x, y], i) => {
    if (i === 0) {
      ctx.moveTo(x, y);
    } else {
      ctx.lineTo(x, y);
    }
  });
}

export function drawFilledPolygon(
  ctx: DrawSurface,
  vertices: readonly Point[],
): void {
  ctx.save();
  ctx.fillStyle = GUIDANCE_FILL;
  ctx.globalAlpha = GUIDANCE_ALPHA;
  tracePath(ctx, vertices);
  ctx.closePath();
  ctx.fill();
  ctx.restore();
}

export function drawContourPolyline(
  ctx: DrawSurface,
  points: readonly Point[],
): void {
  ctx.save();
  ctx.strokeStyle = CONTOUR_STROKE;
  ctx.lineWidth = CONTOUR_WIDTH;
  ctx.globalAlpha = 1;
  tracePath(ctx, points);
  ctx.closePath();
  ctx.stroke();
  ctx.restore();
}

export function drawEye(
  ctx: DrawSurface,
  eye: EyeGuidance,
  tf: DisplayTransform,
  showContour: boolean,
): void {
  for (const polygon of eye.polygons) {
    drawFilledPolygon(ctx, mapPoints(tf, polygon.vertices));
  }
  if (showContour) {
    drawContourPolyline(ctx, mapPoints(tf, eye.contour));
  }
}

/**
 * Draw both eyes' guidance onto the full-face canvas.  A null guidance (no
 * frame yet, or detection failed) just clears.
 */
export function drawGuidanceOverlay(
  ctx: DrawSurface,
  canvasWidth: number,
  canvasHeight: number,
  guidance: GuidanceMessage | null,
  tf: DisplayTransform,
  showContour: boolean,
): void {
  ctx.clearRect(0, 0, canvasWidth, canvasHeight);
  if (guidance?.eyes === undefined) {
    return;
  }
  drawEye(ctx, guidance.eyes.left, tf, showContour);
  drawEye(ctx, guidance.eyes.right, tf, showContour);
}

/**
 * Draw one eye into its zoom panel, re-cropped around the current contour.
 * Returns the transform used so callers (and tests) can locate vertices.
 */
export function drawZoomPanel(
  ctx: DrawSurface,
  panelWidth: number,
  panelHeight: number,
  eye: EyeGuidance | null,
  mirrored: boolean,
  showContour: boolean,
): DisplayTransform | null {
  ctx.clearRect(0, 0, panelWidth, panelHeight);
  if (eye === null) {
    return null;
  }
  const crop = eyeCropBox(eye.contour, ZOOM_MARGIN);
  const tf = transformFor(crop, panelWidth, panelHeight, mirrored);
  drawEye(ctx, eye, tf, showContour);
  return tf;
}

export { toCanvas };

/** Human-readable label/rationale lines for the text panel. */
export function labelLines(guidance: GuidanceMessage | null): string[] {
  if (guidance?.eyes === undefined || guidance.spacing === undefined) {
    return [];
  }
  const lines: string[] = [];
  for (const side of ["left", "right"] as const) {
    const eye = guidance.eyes[side];
    const l = eye.labels;
    lines.push(
      `${side}: size=${l.size} turn=${l.turn} spacing=${l.spacing} ` +
        `(a=${eye.features.aspect_ratio.toFixed(2)})`,
    );
    lines.push(`${side} style: ${eye.style.join("+")}`);
    for (const pair of eye.rationale) {
      lines.push(`  ${pair[0]} -> ${pair[1]}`);
    }
  }
  lines.push(
    `spacing: ${guidance.spacing.label} ` +
      `(d_e=${guidance.spacing.d_e.toFixed(1)}, d_avg=${guidance.spacing.d_avg.toFixed(1)})`,
  );
  return lines;
}
