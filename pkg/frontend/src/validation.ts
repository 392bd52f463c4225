// Client-side checks that run before any request is sent.  Every rule
// here is a subset of what the server enforces; the server stays
// authoritative and anything it rejects is rendered from its response.

import type { ConvertParams } from "./types.js";

export const ALLOWED_EXTENSIONS = [".gcode", ".nc", ".txt"];
export const DEFAULT_MAX_FILE_BYTES = 5 * 1024 * 1024;

export interface FileCheck {
  name: string;
  size: number;
}

function numberOf(text: string): number | null {
  if (text.trim() === "") return null;
  const value = Number(text);
  return Number.isFinite(value) ? value : NaN;
}

export function validateFile(
  file: FileCheck | null,
  maxBytes: number = DEFAULT_MAX_FILE_BYTES,
): string | null {
  if (file === null) {
    return "choose a G-code file to convert";
  }
  const dot = file.name.lastIndexOf(".");
  const extension = dot >= 0 ? file.name.slice(dot).toLowerCase() : "";
  if (!ALLOWED_EXTENSIONS.includes(extension)) {
    return `unsupported file type ${extension || "(none)"}; expected ${ALLOWED_EXTENSIONS.join(", ")}`;
  }
  if (file.size > maxBytes) {
    return `file is larger than the ${Math.round(maxBytes / 1024 / 1024)} MB limit`;
  }
  return null;
}

export function validateParams(params: ConvertParams): Record<string, string> {
  const errors: Record<string, string> = {};

  const radius = numberOf(params.stockRadius);
  if (radius === null) {
    errors.stockRadius = "stock radius is required";
  } else if (Number.isNaN(radius)) {
    errors.stockRadius = "stock radius must be a number";
  } else if (radius <= 0) {
    errors.stockRadius = "stock radius must be positive";
  }

  const passes = numberOf(params.passes);
  const steps = numberOf(params.stepsPerRev);
  if (passes !== null && steps !== null) {
    errors.stepsPerRev = "give passes or steps per revolution, not both";
  }
  for (const [field, value] of [
    ["passes", passes],
    ["stepsPerRev", steps],
  ] as const) {
    if (value === null) continue;
    if (Number.isNaN(value) || !Number.isInteger(value)) {
      errors[field] = "must be a whole number";
    } else if (value < 1) {
      errors[field] = "at least 1 indexed pass is required";
    }
  }
  const explicit = passes ?? steps;

  const tolerance = numberOf(params.tolerance);
  if (tolerance !== null) {
    if (Number.isNaN(tolerance) || tolerance <= 0) {
      errors.tolerance = "tolerance must be a positive number";
    } else if (explicit !== null) {
      errors.tolerance = "give a pass count or a tolerance, not both";
    }
  }

  const overlap = numberOf(params.overlap);
  if (overlap !== null) {
    if (Number.isNaN(overlap) || overlap <= 0 || overlap > 1) {
      errors.overlap = "overlap must be in (0, 1]";
    } else if (explicit !== null || tolerance !== null) {
      errors.overlap = "overlap cannot be combined with a pass count or tolerance";
    }
  }

  const feed = numberOf(params.feedOverride);
  if (feed !== null && (Number.isNaN(feed) || feed <= 0)) {
    errors.feedOverride = "feed override must be a positive number";
  }

  return errors;
}

/** True when a conversion may be submitted. */
export function formIsValid(
  file: FileCheck | null,
  params: ConvertParams,
  maxBytes: number = DEFAULT_MAX_FILE_BYTES,
): boolean {
  return (
    validateFile(file, maxBytes) === null &&
    Object.keys(validateParams(params)).length === 0
  );
}
