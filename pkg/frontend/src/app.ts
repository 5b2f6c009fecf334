/**
 * Browser entry point: webcam capture, in-browser landmark detection,
 * streaming to the guidance service, and the overlay view.
 *
 * URL parameters:
 *   ?service=http://127.0.0.1:8000   service base URL (default: page origin)
 *   ?detector=<module url>           ESM module exporting FilesetResolver and
 *                                    FaceLandmarker (MediaPipe tasks-vision)
 *   ?wasm=<url>&model=<url>          detector asset locations
 *   ?mirror=0                        disable the selfie mirror
 *   ?contours=0                      hide the recognized-contour polylines
 *   ?w=640&h=480                     session image size override
 *
 * Without a camera or detector, frames can be driven from the console or a
 * test harness through the injection hook:
 *   window.eyeguide.inject({t, landmarks: [[x, y], ...]})
 */

import { InjectionSource, type LandmarkFrame } from "./inject.js";
import {
  drawGuidanceOverlay,
  drawZoomPanel,
  labelLines,
  type DrawSurface,
} from "./overlay.js";
import { fullImageTransform } from "./transform.js";
import { SessionClient, type ViewState } from "./session.js";
import type { Point } from "./wire.js";

const DEFAULT_DETECTOR =
  "https://cdn.jsdelivr.net/npm/@mediapipe/tasks-vision@0.10.14/vision_bundle.mjs";
const DEFAULT_WASM =
  "https://cdn.jsdelivr.net/npm/@mediapipe/tasks-vision@0.10.14/wasm";
const DEFAULT_MODEL =
  "https://storage.googleapis.com/mediapipe-models/face_landmarker/face_landmarker/float16/1/face_landmarker.task";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

function ctx2d(canvas: HTMLCanvasElement): CanvasRenderingContext2D {
  const ctx = canvas.getContext("2d");
  if (ctx === null) {
    throw new Error("2d canvas context unavailable");
  }
  return ctx;
}

async function start(): Promise<void> {
  const params = new URLSearchParams(location.search);
  const serviceUrl = params.get("service") ?? location.origin;
  const mirrored = params.get("mirror") !== "0";
  const showContours = params.get("contours") !== "0";
  const imageW = Number(params.get("w") ?? 640);
  const imageH = Number(params.get("h") ?? 480);

  const video = el<HTMLVideoElement>("camera");
  const viewCanvas = el<HTMLCanvasElement>("view");
  const leftZoom = el<HTMLCanvasElement>("zoom-left");
  const rightZoom = el<HTMLCanvasElement>("zoom-right");
  const labelsPanel = el<HTMLPreElement>("labels");
  const statusLine = el<HTMLElement>("status");
  const banner = el<HTMLElement>("banner");
  const hintBox = el<HTMLElement>("hint");
  const frozenBadge = el<HTMLElement>("frozen-badge");
  const freezeButton = el<HTMLButtonElement>("freeze");
  const cameraSelect = el<HTMLSelectElement>("camera-select");

  const view = ctx2d(viewCanvas);
  const zoomL = ctx2d(leftZoom);
  const zoomR = ctx2d(rightZoom);

  const render = (state: ViewState): void => {
    banner.textContent = state.banner ?? "";
    banner.hidden = state.banner === null;
    hintBox.textContent = state.hint ?? "";
    hintBox.hidden = state.hint === null;
    freezeButton.disabled = !state.canFreeze;
    freezeButton.textContent = state.frozen ? "Unfreeze (f)" : "Freeze (f)";
    frozenBadge.hidden = !state.frozen;
    labelsPanel.textContent = labelLines(state.guidance).join("\n");
  };

  const client = new SessionClient({
    baseUrl: serviceUrl,
    socketFactory: (url) => {
      const ws = new WebSocket(url);
      const wrapper = {
        send: (data: string) => ws.send(data),
        close: () => ws.close(),
        onopen: null as (() => void) | null,
        onclose: null as (() => void) | null,
        onmessage: null as ((data: string) => void) | null,
      };
      ws.onopen = () => wrapper.onopen?.();
      ws.onclose = () => wrapper.onclose?.();
      ws.onmessage = (e) => wrapper.onmessage?.(String(e.data));
      return wrapper;
    },
    fetchJson: (url, init) => fetch(url, init),
    onChange: render,
  });

  await client.open({ image: { w: imageW, h: imageH } });

  freezeButton.addEventListener("click", () => client.toggleFreeze());
  document.addEventListener("keydown", (e) => {
    if (e.key === "f" || e.key === "F") {
      client.toggleFreeze();
    }
  });

  const onFrame = (frame: LandmarkFrame): void => {
    client.submitLandmarks(frame.t, frame.landmarks, performance.now());
  };

  // first-class test hook: drives the session exactly like the detector
  const injection = new InjectionSource();
  injection.start(onFrame);
  (window as unknown as Record<string, unknown>)["eyeguide"] = {
    client,
    inject: (frame: LandmarkFrame) => injection.push(frame),
  };

  let detector: { detectForVideo(v: HTMLVideoElement, t: number): unknown } | null =
    null;
  const startCamera = async (deviceId?: string): Promise<void> => {
    try {
      const stream = await navigator.mediaDevices.getUserMedia({
        video: deviceId ? { deviceId: { exact: deviceId } } : true,
      });
      video.srcObject = stream;
      await video.play();
    } catch (e) {
      client.dispatch({ kind: "camera-denied", detail: String(e) });
      return;
    }
    try {
      const devices = await navigator.mediaDevices.enumerateDevices();
      cameraSelect.replaceChildren(
        ...devices
          .filter((d) => d.kind === "videoinput")
          .map((d, i) => {
            const option = document.createElement("option");
            option.value = d.deviceId;
            option.textContent = d.label || `camera ${i + 1}`;
            return option;
          }),
      );
    } catch {
      // device enumeration is cosmetic; the default camera already runs
    }
    if (detector === null) {
      try {
        const url = params.get("detector") ?? DEFAULT_DETECTOR;
        const vision = (await import(/* webpackIgnore: true */ url)) as {
          FilesetResolver: { forVisionTasks(base: string): Promise<unknown> };
          FaceLandmarker: {
            createFromOptions(
              fileset: unknown,
              options: unknown,
            ): Promise<{ detectForVideo(v: HTMLVideoElement, t: number): unknown }>;
          };
        };
        const fileset = await vision.FilesetResolver.forVisionTasks(
          params.get("wasm") ?? DEFAULT_WASM,
        );
        detector = await vision.FaceLandmarker.createFromOptions(fileset, {
          baseOptions: { modelAssetPath: params.get("model") ?? DEFAULT_MODEL },
          runningMode: "VIDEO",
          numFaces: 1,
        });
      } catch (e) {
        client.dispatch({ kind: "detector-failed", detail: String(e) });
      }
    }
  };

  cameraSelect.addEventListener("change", () => {
    void startCamera(cameraSelect.value);
  });
  void startCamera();

  let fps = 0;
  let lastTick = performance.now();

  const tick = (now: number): void => {
    fps = 0.9 * fps + 0.1 * (1000 / Math.max(1, now - lastTick));
    lastTick = now;

    if (detector !== null && video.readyState >= 2) {
      const result = detector.detectForVideo(video, now) as {
        faceLandmarks?: { x: number; y: number }[][];
      };
      const face = result.faceLandmarks?.[0];
      if (face !== undefined && face.length > 0) {
        const landmarks: Point[] = face.map((p) => [p.x, p.y]);
        onFrame({ t: Math.round(now), landmarks });
      } else {
        client.dispatch({ kind: "no-face" });
      }
    }

    const cw = viewCanvas.width;
    const ch = viewCanvas.height;
    const state = client.view;
    const doc = state.guidance;
    const iw = doc?.image?.w ?? imageW;
    const ih = doc?.image?.h ?? imageH;
    const tf = fullImageTransform(iw, ih, cw, ch, mirrored);

    view.clearRect(0, 0, cw, ch);
    if (video.readyState >= 2) {
      view.save();
      if (mirrored) {
        view.setTransform(-1, 0, 0, 1, cw, 0);
      }
      const scale = Math.min(cw / video.videoWidth, ch / video.videoHeight);
      view.drawImage(
        video,
        (cw - video.videoWidth * scale) / 2,
        (ch - video.videoHeight * scale) / 2,
        video.videoWidth * scale,
        video.videoHeight * scale,
      );
      view.restore();
    }
    const overlay = view as unknown as DrawSurface;
    drawGuidanceOverlay(overlay, cw, ch, doc, tf, showContours);
    drawZoomPanel(
      zoomL as unknown as DrawSurface,
      leftZoom.width,
      leftZoom.height,
      doc?.eyes?.left ?? null,
      mirrored,
      showContours,
    );
    drawZoomPanel(
      zoomR as unknown as DrawSurface,
      rightZoom.width,
      rightZoom.height,
      doc?.eyes?.right ?? null,
      mirrored,
      showContours,
    );

    const detection = doc !== null ? "ok" : "-";
    statusLine.textContent =
      `${fps.toFixed(0)} fps | connection ${state.connection} | ` +
      `detection ${detection} | dropped ${state.droppedMessages}`;
    requestAnimationFrame(tick);
  };
  requestAnimationFrame(tick);
}

void start();
