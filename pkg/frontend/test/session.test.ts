import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";

import { labelLines } from "../src/overlay.js";
import {
  ADJUST_HINT,
  NO_FACE_HINT,
  SessionClient,
  initialViewState,
  reduceView,
  streamUrl,
  type FetchJson,
  type WireSocket,
} from "../src/session.js";
import type { Point } from "../src/wire.js";

const guidanceRaw = readFileSync(
  new URL("./fixtures/guidance_e30.json", import.meta.url),
  "utf-8",
);
const frameFixture = JSON.parse(
  readFileSync(new URL("./fixtures/frame_e30.json", import.meta.url), "utf-8"),
) as { t: number; landmarks: Point[] };

interface GuidanceDoc {
  frozen: boolean;
  t: number;
  eyes: {
    left: { contour: number[][]; polygons: { vertices: number[][] }[] };
    right: { contour: number[][]; polygons: { vertices: number[][] }[] };
  };
}

function movedGuidance(dx: number, frozen: boolean): string {
  const doc = JSON.parse(guidanceRaw) as GuidanceDoc;
  doc.frozen = frozen;
  doc.t += 1;
  for (const side of ["left", "right"] as const) {
    const eye = doc.eyes[side];
    eye.contour = eye.contour.map(([x, y]) => [(x as number) + dx, y as number]);
    for (const polygon of eye.polygons) {
      polygon.vertices = polygon.vertices.map(([x, y]) => [
        (x as number) + dx,
        y as number,
      ]);
    }
  }
  return JSON.stringify(doc);
}

describe("view-state reducer", () => {
  it("starts with freeze disabled and no guidance", () => {
    const state = initialViewState();
    expect(state.canFreeze).toBe(false);
    expect(state.frozen).toBe(false);
    expect(state.guidance).toBeNull();
  });

  it("enables freeze after the first detection-ok frame", () => {
    const state = reduceView(initialViewState(), {
      kind: "server-message",
      raw: guidanceRaw,
    });
    expect(state.canFreeze).toBe(true);
    expect(state.guidance?.t).toBe(0);
    expect(state.hint).toBeNull();
  });

  it("clears the overlay and hints on detection failure", () => {
    let state = reduceView(initialViewState(), {
      kind: "server-message",
      raw: guidanceRaw,
    });
    state = reduceView(state, {
      kind: "server-message",
      raw: JSON.stringify({
        type: "guidance",
        t: 1,
        detection_ok: false,
        frozen: false,
        fallback_used: false,
        error_code: "height_zero",
      }),
    });
    expect(state.guidance).toBeNull();
    expect(state.hint).toBe(ADJUST_HINT);
    // freeze stays available once a good frame has been seen
    expect(state.canFreeze).toBe(true);
  });

  it("leaves the view unchanged on a malformed message", () => {
    const before = reduceView(initialViewState(), {
      kind: "server-message",
      raw: guidanceRaw,
    });
    const after = reduceView(before, {
      kind: "server-message",
      raw: '{"type": "guidance", "t": "broken"}',
    });
    expect(after.droppedMessages).toBe(1);
    expect({ ...after, droppedMessages: 0 }).toEqual({
      ...before,
      droppedMessages: 0,
    });
  });

  it("records server errors without touching guidance", () => {
    const before = reduceView(initialViewState(), {
      kind: "server-message",
      raw: guidanceRaw,
    });
    const after = reduceView(before, {
      kind: "server-message",
      raw: JSON.stringify({
        type: "error",
        code: "nothing_to_freeze",
        detail: "no successfully analyzed frame to freeze",
      }),
    });
    expect(after.lastError).toBe(
      "nothing_to_freeze: no successfully analyzed frame to freeze",
    );
    expect(after.guidance).toEqual(before.guidance);
  });

  it("tracks the frozen badge from messages", () => {
    let state = reduceView(initialViewState(), {
      kind: "server-message",
      raw: guidanceRaw,
    });
    expect(state.frozen).toBe(false);
    state = reduceView(state, {
      kind: "server-message",
      raw: movedGuidance(5, true),
    });
    expect(state.frozen).toBe(true);
  });

  it("surfaces setup failures as banners and no-face as a hint", () => {
    expect(
      reduceView(initialViewState(), { kind: "camera-denied", detail: "nope" })
        .banner,
    ).toMatch(/camera access denied/);
    expect(
      reduceView(initialViewState(), { kind: "detector-failed", detail: "404" })
        .banner,
    ).toMatch(/detector failed to load/);
    expect(
      reduceView(initialViewState(), { kind: "no-face" }).hint,
    ).toBe(NO_FACE_HINT);
  });
});

describe("stream URL", () => {
  it("derives ws and wss endpoints", () => {
    expect(streamUrl("http://127.0.0.1:8000", "abc")).toBe(
      "ws://127.0.0.1:8000/sessions/abc/stream",
    );
    expect(streamUrl("https://example.test/", "abc")).toBe(
      "wss://example.test/sessions/abc/stream",
    );
  });
});

class FakeSocket implements WireSocket {
  sent: string[] = [];
  closed = false;
  onopen: (() => void) | null = null;
  onclose: (() => void) | null = null;
  onmessage: ((data: string) => void) | null = null;

  send(data: string): void {
    this.sent.push(data);
  }

  close(): void {
    this.closed = true;
  }
}

function fetchOk(sessionId: string): FetchJson {
  return async () => ({
    ok: true,
    status: 200,
    json: async () => ({ session_id: sessionId, config: {} }),
  });
}

async function openedClient(): Promise<{ client: SessionClient; socket: FakeSocket }> {
  let socket: FakeSocket | null = null;
  const client = new SessionClient({
    baseUrl: "http://service.test",
    socketFactory: () => {
      socket = new FakeSocket();
      return socket;
    },
    fetchJson: fetchOk("s1"),
  });
  await client.open();
  if (socket === null) {
    throw new Error("socket was not created");
  }
  (socket as FakeSocket).onopen?.();
  return { client, socket };
}

describe("session client", () => {
  it("opens a session then connects its stream", async () => {
    const urls: string[] = [];
    const client = new SessionClient({
      baseUrl: "http://service.test",
      socketFactory: (url) => {
        urls.push(url);
        return new FakeSocket();
      },
      fetchJson: fetchOk("abc123"),
    });
    await client.open({ image: { w: 512, h: 512 } });
    expect(client.sessionId).toBe("abc123");
    expect(urls).toEqual(["ws://service.test/sessions/abc123/stream"]);
  });

  it("shows a banner when the session cannot be opened", async () => {
    const client = new SessionClient({
      baseUrl: "http://service.test",
      socketFactory: () => {
        throw new Error("must not connect");
      },
      fetchJson: async () => ({
        ok: false,
        status: 400,
        json: async () => ({ error: "bad_config" }),
      }),
    });
    await client.open();
    expect(client.view.banner).toMatch(/could not open session/);
  });

  it("passes injected landmarks through to the wire unchanged", async () => {
    const { client, socket } = await openedClient();
    const ok = client.submitLandmarks(frameFixture.t, frameFixture.landmarks, 0);
    expect(ok).toBe(true);
    expect(socket.sent).toHaveLength(1);
    expect(JSON.parse(socket.sent[0] as string)).toEqual({
      type: "frame",
      t: frameFixture.t,
      landmarks: frameFixture.landmarks,
    });
  });

  it("does not send before the stream is open", () => {
    const client = new SessionClient({
      baseUrl: "http://service.test",
      socketFactory: () => new FakeSocket(),
      fetchJson: fetchOk("s1"),
    });
    expect(client.submitLandmarks(0, [], 0)).toBe(false);
  });

  it("throttles a 60 fps stream down to 30 messages per second", async () => {
    const { client, socket } = await openedClient();
    for (let i = 0; i < 120; i++) {
      client.submitLandmarks(i, [[0.5, 0.5]], i * (1000 / 60));
    }
    expect(socket.sent.length).toBe(60); // half of two seconds' frames
  });

  it("ignores freeze until a detection-ok frame arrived", async () => {
    const { client, socket } = await openedClient();
    expect(client.freeze()).toBe(false);
    expect(socket.sent).toHaveLength(0);
    socket.onmessage?.(guidanceRaw);
    expect(client.freeze()).toBe(true);
    expect(socket.sent).toEqual(['{"type":"freeze"}']);
  });

  it("toggles between freeze and unfreeze", async () => {
    const { client, socket } = await openedClient();
    socket.onmessage?.(guidanceRaw);
    client.toggleFreeze();
    socket.onmessage?.(movedGuidance(0, true));
    client.toggleFreeze();
    expect(socket.sent).toEqual(['{"type":"freeze"}', '{"type":"unfreeze"}']);
  });

  it("keeps label text fixed across motion while frozen", async () => {
    const { client, socket } = await openedClient();
    socket.onmessage?.(guidanceRaw);
    const labelsBefore = labelLines(client.view.guidance);
    const verticesBefore =
      client.view.guidance?.eyes?.left.polygons[0]?.vertices;
    client.freeze();
    // the face moves 25 px; the frozen service keeps labels, geometry tracks
    socket.onmessage?.(movedGuidance(25, true));
    const labelsAfter = labelLines(client.view.guidance);
    const verticesAfter =
      client.view.guidance?.eyes?.left.polygons[0]?.vertices;
    expect(client.view.frozen).toBe(true);
    expect(labelsAfter).toEqual(labelsBefore);
    expect(verticesAfter).not.toEqual(verticesBefore);
  });

  it("closes the socket on close()", async () => {
    const { client, socket } = await openedClient();
    client.close();
    expect(socket.closed).toBe(true);
  });
});
