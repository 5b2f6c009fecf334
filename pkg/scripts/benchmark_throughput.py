"""Measure session throughput and per-frame latency on a fixture.

Usage: python3 scripts/benchmark_throughput.py [fixture] [n_frames]
Prints frames/s plus latency percentiles; the service targets 60 frames/s
with a median per-frame latency of at most 10 ms.
"""

from __future__ import annotations

import os
import statistics
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from eyeguide.contours import FaceMeshFrame, load_fixture
from eyeguide.service import SessionManager

DEFAULT_FIXTURE = os.path.join(os.path.dirname(__file__), "..", "tests",
                               "fixtures", "e30_pair.json")


def main():
    fixture = sys.argv[1] if len(sys.argv) > 1 else DEFAULT_FIXTURE
    n = int(sys.argv[2]) if len(sys.argv) > 2 else 600
    _, _, frames = load_fixture(fixture)
    base = frames[0]
    stream = [FaceMeshFrame(landmarks=base.landmarks, width=base.width,
                            height=base.height, timestamp_ms=i)
              for i in range(n)]

    manager = SessionManager()
    session = manager.open_session()
    latencies = []
    start = time.perf_counter()
    for frame in stream:
        t0 = time.perf_counter()
        result = manager.submit_frame(session, frame)
        latencies.append((time.perf_counter() - t0) * 1000.0)
        assert result is not None and result.detection_ok
    wall = time.perf_counter() - start

    latencies.sort()
    pct = lambda q: latencies[min(len(latencies) - 1, int(q * len(latencies)))]
    print(f"frames            {n}")
    print(f"wall time         {wall:.3f} s")
    print(f"throughput        {n / wall:.1f} frames/s")
    print(f"latency median    {statistics.median(latencies):.3f} ms")
    print(f"latency p90       {pct(0.90):.3f} ms")
    print(f"latency p99       {pct(0.99):.3f} ms")
    print(f"latency max       {latencies[-1]:.3f} ms")


if __name__ == "__main__":
    main()
