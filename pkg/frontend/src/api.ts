// Talks to POST /api/convert and classifies every way it can answer.
// The caller gets a discriminated union instead of raw fetch errors, so
// the UI code is a switch statement, not a try/catch pyramid.

import type {
  ConvertOutcome,
  ConvertParams,
  ConvertResponse,
  ReportViolation,
} from "./types.js";

export function buildFormData(file: File, params: ConvertParams): FormData {
  const form = new FormData();
  form.append("file", file, file.name);
  form.append("stock_radius", params.stockRadius.trim());
  const optional: [string, string][] = [
    ["passes", params.passes],
    ["steps_per_rev", params.stepsPerRev],
    ["overlap", params.overlap],
    ["tolerance", params.tolerance],
    ["feed_override", params.feedOverride],
  ];
  for (const [name, value] of optional) {
    if (value.trim() !== "") form.append(name, value.trim());
  }
  if (params.diameterBasis !== "toolpath") {
    form.append("diameter_basis", params.diameterBasis);
  }
  return form;
}

export interface RequestOptions {
  baseUrl?: string;
  fetchImpl?: typeof fetch;
  signal?: AbortSignal;
}

export async function requestConversion(
  file: File,
  params: ConvertParams,
  options: RequestOptions = {},
): Promise<ConvertOutcome> {
  const doFetch = options.fetchImpl ?? fetch;
  const url = `${options.baseUrl ?? ""}/api/convert`;
  let response: Response;
  try {
    response = await doFetch(url, {
      method: "POST",
      body: buildFormData(file, params),
      signal: options.signal ?? null,
    });
  } catch (err) {
    if (err instanceof DOMException && err.name === "AbortError") {
      return { kind: "superseded" };
    }
    return { kind: "network-error", message: String(err) };
  }

  if (response.status === 200) {
    const body = (await response.json()) as ConvertResponse;
    return { kind: "ok", response: body };
  }
  if (response.status === 400) {
    const body = (await response.json()) as { fields?: Record<string, string> };
    return { kind: "invalid-params", fields: body.fields ?? {} };
  }
  if (response.status === 413) {
    const body = (await response.json()) as { max_file_bytes?: number };
    return { kind: "too-large", maxFileBytes: body.max_file_bytes ?? 0 };
  }
  if (response.status === 422) {
    const body = (await response.json()) as {
      error?: string;
      report?: ReportViolation[];
    };
    return {
      kind: "gcode-rejected",
      message: body.error ?? "the G-code was rejected",
      report: body.report ?? [],
    };
  }
  return {
    kind: "network-error",
    message: `unexpected response ${response.status}`,
  };
}
