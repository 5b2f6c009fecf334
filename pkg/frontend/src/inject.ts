/**
 * Landmark sources: where frames of normalized landmarks come from.
 *
 * The camera+detector source lives in app.ts (browser only).  The injection
 * source is a first-class test hook: anything that can call `push` drives
 * the client exactly as a detector would, so the full pipeline is testable
 * and demoable without a camera.
 */

import type { Point } from "./wire.js";

export interface LandmarkFrame {
  /** Milliseconds timestamp, monotone within a session. */
  t: number;
  /** Normalized [x, y] landmark positions (full mesh, >= 468 points). */
  landmarks: Point[];
}

export type FrameHandler = (frame: LandmarkFrame) => void;

export class InjectionSource {
  private handler: FrameHandler | null = null;

  start(onFrame: FrameHandler): void {
    this.handler = onFrame;
  }

  stop(): void {
    this.handler = null;
  }

  /** Inject one frame; returns false when no consumer is attached. */
  push(frame: LandmarkFrame): boolean {
    if (this.handler === null) {
      return false;
    }
    this.handler(frame);
    return true;
  }
}
