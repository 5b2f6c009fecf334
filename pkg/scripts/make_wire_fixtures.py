"""Capture real wire messages for the browser client's tests.

Drives the actual WebSocket endpoint with a landmark fixture and saves both
the outgoing frame message and the service's guidance reply under
frontend/test/fixtures/, so the client tests validate against genuine
service output rather than hand-written approximations.
"""

from __future__ import annotations

import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from starlette.testclient import TestClient

from eyeguide.server import create_app

FIXTURE = os.path.join(os.path.dirname(__file__), "..", "tests", "fixtures",
                       "e30_pair.json")
OUT_DIR = os.path.join(os.path.dirname(__file__), "..", "frontend", "test",
                       "fixtures")


def main():
    os.makedirs(OUT_DIR, exist_ok=True)
    with open(FIXTURE, encoding="utf-8") as fh:
        doc = json.load(fh)
    frame = doc["frames"][0]
    outgoing = {"type": "frame", "t": frame["t"], "landmarks": frame["landmarks"]}

    client = TestClient(create_app())
    opened = client.post("/sessions", json={"image": doc["image"]}).json()
    with client.websocket_connect(f"/sessions/{opened['session_id']}/stream") as ws:
        ws.send_text(json.dumps(outgoing))
        guidance = ws.receive_json()

    for name, payload in (("frame_e30.json", outgoing),
                          ("guidance_e30.json", guidance)):
        path = os.path.join(OUT_DIR, name)
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
