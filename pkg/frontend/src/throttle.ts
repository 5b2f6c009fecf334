/**
 * Outgoing message rate limiter.
 *
 * The detector can produce 60 landmark frames per second; the wire carries
 * at most `maxPerSecond` of them.  Limiting is purely time-based so a burst
 * after a stall cannot exceed the rate either.
 */

export class RateLimiter {
  // A stream at exactly the nominal rate (60 fps into a 30/s cap) produces
  // gaps that round one float ulp below the interval; without a little slack
  // those frames would be dropped and the effective rate would sag well
  // below the cap.  One nanosecond is far above any double rounding error
  // for realistic timestamps and far below real pacing concerns.
  private static readonly SLACK_MS = 1e-6;

  private readonly minIntervalMs: number;
  private lastMs = -Infinity;

  constructor(maxPerSecond: number) {
    if (!(maxPerSecond > 0)) {
      throw new RangeError(`rate must be positive, got ${maxPerSecond}`);
    }
    this.minIntervalMs = 1000 / maxPerSecond;
  }

  /** True if a message may be sent at `nowMs`; consumes the slot if so. */
  tryAcquire(nowMs: number): boolean {
    if (nowMs - this.lastMs < this.minIntervalMs - RateLimiter.SLACK_MS) {
      return false;
    }
    this.lastMs = nowMs;
    return true;
  }

  reset(): void {
    this.lastMs = -Infinity;
  }
}
