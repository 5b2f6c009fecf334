/**
 * Wire schema for the guidance service.
 *
 * Client to server (JSON text over the session WebSocket):
 *   {"type": "frame", "t": <int ms>, "landmarks": [[x, y], ...]}   normalized
 *   {"type": "freeze"} | {"type": "unfreeze"}
 *
 * Server to client:
 *   {"type": "guidance", ...}  per processed frame
 *   {"type": "error", "code": <str>, "detail": <str>}
 *
 * All polygon and contour coordinates in guidance messages are source-image
 * pixels; the client transforms them for display but never edits geometry.
 */

import { z } from "zod";

export type Point = [number, number];

const pointSchema = z
  .array(z.number())
  .length(2)
  .transform((xy): Point => [xy[0] as number, xy[1] as number]);

const featuresSchema = z.object({
  width: z.number(),
  height: z.number(),
  aspect_ratio: z.number(),
  alpha_deg: z.number(),
  beta_deg: z.number(),
});

const labelsSchema = z.object({
  size: z.enum(["big", "average", "small"]),
  turn: z.enum(["downturned", "upturned"]),
  spacing: z.enum(["close", "average", "open"]),
});

const thicknessSchema = z.object({
  h: z.number(),
  h_lower_outer: z.number(),
  h_lower_inner: z.number(),
});

const polygonSchema = z.object({
  style: z.string(),
  vertices: z.array(pointSchema).min(3),
});

export const eyeGuidanceSchema = z.object({
  contour: z.array(pointSchema).length(16),
  features: featuresSchema,
  labels: labelsSchema,
  style: z.array(z.string()),
  thickness: thicknessSchema,
  rationale: z.array(z.array(z.string()).length(2)),
  polygons: z.array(polygonSchema),
});

const spacingSchema = z.object({
  d_e: z.number(),
  d_avg: z.number(),
  label: z.enum(["close", "average", "open"]),
});

export const guidanceMessageSchema = z.object({
  type: z.literal("guidance"),
  t: z.number().int(),
  detection_ok: z.boolean(),
  frozen: z.boolean(),
  fallback_used: z.boolean(),
  image: z.object({ w: z.number().int(), h: z.number().int() }).optional(),
  eyes: z
    .object({ left: eyeGuidanceSchema, right: eyeGuidanceSchema })
    .optional(),
  spacing: spacingSchema.optional(),
  error_code: z.string().optional(),
});

export const errorMessageSchema = z.object({
  type: z.literal("error"),
  code: z.string(),
  detail: z.string(),
});

export const serverMessageSchema = z.discriminatedUnion("type", [
  guidanceMessageSchema,
  errorMessageSchema,
]);

export type EyeGuidance = z.infer<typeof eyeGuidanceSchema>;
export type GuidanceMessage = z.infer<typeof guidanceMessageSchema>;
export type ErrorMessage = z.infer<typeof errorMessageSchema>;
export type ServerMessage = z.infer<typeof serverMessageSchema>;

export const sessionOpenSchema = z.object({
  session_id: z.string().min(1),
  config: z.unknown(),
});

export type SessionOpen = z.infer<typeof sessionOpenSchema>;

export type ParseResult =
  | { ok: true; message: ServerMessage }
  | { ok: false; error: string };

/** Parse one incoming WebSocket payload; never throws. */
export function parseServerMessage(raw: string): ParseResult {
  let data: unknown;
  try {
    data = JSON.parse(raw);
  } catch (e) {
    return { ok: false, error: `not valid JSON: ${String(e)}` };
  }
  const result = serverMessageSchema.safeParse(data);
  if (!result.success) {
    return { ok: false, error: result.error.issues[0]?.message ?? "bad message" };
  }
  return { ok: true, message: result.data };
}

export function frameMessage(t: number, landmarks: readonly Point[]): string {
  if (!Number.isInteger(t)) {
    throw new RangeError(`frame timestamp must be an integer, got ${t}`);
  }
  return JSON.stringify({ type: "frame", t, landmarks });
}

export function freezeMessage(): string {
  return JSON.stringify({ type: "freeze" });
}

export function unfreezeMessage(): string {
  return JSON.stringify({ type: "unfreeze" });
}
