/**
 * The single display transform: image pixels to canvas pixels.
 *
 * Every drawn vertex goes through exactly one of these transforms — uniform
 * scale to fit the target rectangle, centering offsets, and an optional
 * selfie mirror about the canvas's vertical midline.  Polygon geometry is
 * never edited beyond this mapping.
 */

import type { Point } from "./wire.js";

export interface CropBox {
  x: number;
  y: number;
  width: number;
  height: number;
}

export interface DisplayTransform {
  /** Image px per canvas px, uniform in x and y. */
  readonly scale: number;
  readonly offsetX: number;
  readonly offsetY: number;
  readonly mirrored: boolean;
  /** Canvas width, the mirror line sits at half of it. */
  readonly canvasWidth: number;
}

/**
 * Fit an image region into a canvas of the given size, preserving aspect
 * ratio and centering the region.
 */
export function transformFor(
  region: CropBox,
  canvasWidth: number,
  canvasHeight: number,
  mirrored: boolean,
): DisplayTransform {
  if (region.width <= 0 || region.height <= 0) {
    throw new RangeError("region must have positive size");
  }
  if (canvasWidth <= 0 || canvasHeight <= 0) {
    throw new RangeError("canvas must have positive size");
  }
  const scale = Math.min(canvasWidth / region.width, canvasHeight / region.height);
  const offsetX = (canvasWidth - region.width * scale) / 2 - region.x * scale;
  const offsetY = (canvasHeight - region.height * scale) / 2 - region.y * scale;
  return { scale, offsetX, offsetY, mirrored, canvasWidth };
}

export function fullImageTransform(
  imageWidth: number,
  imageHeight: number,
  canvasWidth: number,
  canvasHeight: number,
  mirrored: boolean,
): DisplayTransform {
  return transformFor(
    { x: 0, y: 0, width: imageWidth, height: imageHeight },
    canvasWidth,
    canvasHeight,
    mirrored,
  );
}

export function toCanvas(tf: DisplayTransform, p: Point): Point {
  const x = p[0] * tf.scale + tf.offsetX;
  const y = p[1] * tf.scale + tf.offsetY;
  return [tf.mirrored ? tf.canvasWidth - x : x, y];
}

export function mapPoints(
  tf: DisplayTransform,
  points: readonly Point[],
): Point[] {
  return points.map((p) => toCanvas(tf, p));
}

/**
 * Bounding box of an eye contour expanded by a margin fraction of the box
 * size on every side (0.4 adds 40% of the width left and right, 40% of the
 * height above and below).
 */
export function eyeCropBox(
  contour: readonly Point[],
  marginFraction = 0.4,
): CropBox {
  if (contour.length === 0) {
    throw new RangeError("contour must not be empty");
  }
  let minX = Infinity;
  let minY = Infinity;
  let maxX = -Infinity;
  let maxY = -Infinity;
  for (const [x, y] of contour) {
    minX = Math.min(minX, x);
    minY = Math.min(minY, y);
    maxX = Math.max(maxX, x);
    maxY = Math.max(maxY, y);
  }
  const width = maxX - minX;
  const height = maxY - minY;
  return {
    x: minX - width * marginFraction,
    y: minY - height * marginFraction,
    width: width * (1 + 2 * marginFraction),
    height: height * (1 + 2 * marginFraction),
  };
}
