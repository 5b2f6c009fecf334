/**
 * Session client: view-state reducer plus the WebSocket wiring.
 *
 * All display-relevant state lives in a ViewState and changes only through
 * `reduceView`, so the freeze/connection/overlay rules are testable without
 * a browser.  The client itself owns the socket, the outgoing throttle, and
 * the HTTP session handshake; socket and fetch implementations are injected
 * so tests can drive it with fakes.
 */

import { RateLimiter } from "./throttle.js";
import {
  frameMessage,
  freezeMessage,
  parseServerMessage,
  sessionOpenSchema,
  unfreezeMessage,
  type GuidanceMessage,
  type Point,
} from "./wire.js";

export type ConnectionState = "idle" | "connecting" | "open" | "closed";

export interface ViewState {
  connection: ConnectionState;
  /** Fatal setup problem shown as a banner; null when healthy. */
  banner: string | null;
  /** Transient user guidance, e.g. when detection fails. */
  hint: string | null;
  /** Freeze stays disabled until the first detection-ok frame. */
  canFreeze: boolean;
  frozen: boolean;
  /** Newest displayable guidance; null clears the overlay. */
  guidance: GuidanceMessage | null;
  /** Count of malformed server payloads (logged, view unchanged). */
  droppedMessages: number;
  /** Latest server-reported error, as "code: detail". */
  lastError: string | null;
}

export const ADJUST_HINT = "eyes not recognized - adjust the camera angle";
export const NO_FACE_HINT = "no face detected";

export function initialViewState(): ViewState {
  return {
    connection: "idle",
    banner: null,
    hint: null,
    canFreeze: false,
    frozen: false,
    guidance: null,
    droppedMessages: 0,
    lastError: null,
  };
}

export type SessionEvent =
  | { kind: "connecting" }
  | { kind: "open" }
  | { kind: "closed" }
  | { kind: "server-message"; raw: string }
  | { kind: "no-face" }
  | { kind: "camera-denied"; detail: string }
  | { kind: "detector-failed"; detail: string }
  | { kind: "session-failed"; detail: string };

export function reduceView(state: ViewState, event: SessionEvent): ViewState {
  switch (event.kind) {
    case "connecting":
      return { ...state, connection: "connecting" };
    case "open":
      return { ...state, connection: "open", banner: null };
    case "closed":
      return { ...state, connection: "closed" };
    case "no-face":
      return { ...state, hint: NO_FACE_HINT };
    case "camera-denied":
      return { ...state, banner: `camera access denied: ${event.detail}` };
    case "detector-failed":
      return { ...state, banner: `landmark detector failed to load: ${event.detail}` };
    case "session-failed":
      return { ...state, banner: `could not open session: ${event.detail}` };
    case "server-message":
      return applyServerMessage(state, event.raw);
  }
}

function applyServerMessage(state: ViewState, raw: string): ViewState {
  const parsed = parseServerMessage(raw);
  if (!parsed.ok) {
    // malformed payload: log it, leave the view untouched
    return { ...state, droppedMessages: state.droppedMessages + 1 };
  }
  const msg = parsed.message;
  if (msg.type === "error") {
    return { ...state, lastError: `${msg.code}: ${msg.detail}` };
  }
  if (!msg.detection_ok) {
    return {
      ...state,
      guidance: null,
      hint: ADJUST_HINT,
      frozen: msg.frozen,
    };
  }
  return {
    ...state,
    guidance: msg,
    hint: null,
    canFreeze: true,
    frozen: msg.frozen,
  };
}

/** Minimal socket surface so tests can substitute a fake. */
export interface WireSocket {
  send(data: string): void;
  close(): void;
  onopen: (() => void) | null;
  onclose: (() => void) | null;
  onmessage: ((data: string) => void) | null;
}

export type SocketFactory = (url: string) => WireSocket;

export type FetchJson = (
  url: string,
  init: { method: string; headers: Record<string, string>; body: string },
) => Promise<{ ok: boolean; status: number; json(): Promise<unknown> }>;

export interface SessionClientOptions {
  /** Service base URL, e.g. "http://127.0.0.1:8000". */
  baseUrl: string;
  socketFactory: SocketFactory;
  fetchJson: FetchJson;
  maxMessagesPerSecond?: number;
  onChange?: (view: ViewState) => void;
}

export function streamUrl(baseUrl: string, sessionId: string): string {
  const ws = baseUrl.replace(/^http:/, "ws:").replace(/^https:/, "wss:");
  return `${ws.replace(/\/$/, "")}/sessions/${sessionId}/stream`;
}

export class SessionClient {
  private readonly opts: SessionClientOptions;
  private readonly limiter: RateLimiter;
  private socket: WireSocket | null = null;
  private state: ViewState = initialViewState();
  sessionId: string | null = null;

  constructor(opts: SessionClientOptions) {
    this.opts = opts;
    this.limiter = new RateLimiter(opts.maxMessagesPerSecond ?? 30);
  }

  get view(): ViewState {
    return this.state;
  }

  dispatch(event: SessionEvent): void {
    this.state = reduceView(this.state, event);
    this.opts.onChange?.(this.state);
  }

  /** Open a session over HTTP, then connect its stream. */
  async open(overrides: object = {}): Promise<void> {
    this.dispatch({ kind: "connecting" });
    let sessionId: string;
    try {
      const response = await this.opts.fetchJson(
        `${this.opts.baseUrl.replace(/\/$/, "")}/sessions`,
        {
          method: "POST",
          headers: { "content-type": "application/json" },
          body: JSON.stringify(overrides),
        },
      );
      if (!response.ok) {
        throw new Error(`service answered ${response.status}`);
      }
      const opened = sessionOpenSchema.parse(await response.json());
      sessionId = opened.session_id;
    } catch (e) {
      this.dispatch({ kind: "session-failed", detail: String(e) });
      return;
    }
    this.sessionId = sessionId;
    const socket = this.opts.socketFactory(streamUrl(this.opts.baseUrl, sessionId));
    socket.onopen = () => this.dispatch({ kind: "open" });
    socket.onclose = () => this.dispatch({ kind: "closed" });
    socket.onmessage = (data) => this.dispatch({ kind: "server-message", raw: data });
    this.socket = socket;
  }

  /**
   * Send one landmark frame, subject to the outgoing rate limit.
   * Returns true when the frame actually went out.
   */
  submitLandmarks(t: number, landmarks: readonly Point[], nowMs: number): boolean {
    if (this.socket === null || this.state.connection !== "open") {
      return false;
    }
    if (!this.limiter.tryAcquire(nowMs)) {
      return false;
    }
    this.socket.send(frameMessage(t, landmarks));
    return true;
  }

  /** Freeze styling; ignored until the first detection-ok frame arrived. */
  freeze(): boolean {
    if (!this.state.canFreeze || this.socket === null || this.state.connection !== "open") {
      return false;
    }
    this.socket.send(freezeMessage());
    return true;
  }

  unfreeze(): boolean {
    if (this.socket === null || this.state.connection !== "open") {
      return false;
    }
    this.socket.send(unfreezeMessage());
    return true;
  }

  toggleFreeze(): void {
    if (this.state.frozen) {
      this.unfreeze();
    } else {
      this.freeze();
    }
  }

  close(): void {
    this.socket?.close();
    this.socket = null;
  }
}
