// Page wiring: form inputs on the left, previews on the right, one
// conversion in flight at a time.  All rendering pulls from the last
// server response; the only logic that runs before a request is the
// client-side subset of the validation rules.

import { requestConversion } from "./api.js";
import { gcodeBlob, downloadDataUrl, suggestOutputName, triggerDownload } from "./download.js";
import { MeshViewer } from "./mesh3d.js";
import { drawPlot } from "./plot2d.js";
import { PreviewTracker, SingleFlight, requestSignature } from "./state.js";
import type { ConvertParams, ConvertResponse } from "./types.js";
import { formIsValid, validateFile, validateParams } from "./validation.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) throw new Error(`missing element #${id}`);
  return node as T;
}

const fileInput = el<HTMLInputElement>("file-input");
const dropZone = el<HTMLElement>("drop-zone");
const fileNameEl = el<HTMLElement>("file-name");
const convertBtn = el<HTMLButtonElement>("convert-btn");
const statusEl = el<HTMLElement>("status");
const captionEl = el<HTMLElement>("plan-caption");
const planDetailEl = el<HTMLElement>("plan-detail");
const warningsEl = el<HTMLUListElement>("warnings");
const previewSection = el<HTMLElement>("preview-section");
const plotCanvas = el<HTMLCanvasElement>("plot-canvas");
const meshContainer = el<HTMLElement>("mesh-container");
const meshNoteEl = el<HTMLElement>("mesh-note");
const downloadGcodeBtn = el<HTMLButtonElement>("download-gcode");
const downloadPngBtn = el<HTMLButtonElement>("download-png");

const fieldInputs: Record<keyof Omit<ConvertParams, "diameterBasis">, HTMLInputElement> = {
  stockRadius: el<HTMLInputElement>("stock-radius"),
  passes: el<HTMLInputElement>("passes"),
  stepsPerRev: el<HTMLInputElement>("steps-per-rev"),
  overlap: el<HTMLInputElement>("overlap"),
  tolerance: el<HTMLInputElement>("tolerance"),
  feedOverride: el<HTMLInputElement>("feed-override"),
};
const basisSelect = el<HTMLSelectElement>("diameter-basis");

let currentFile: File | null = null;
let lastResponse: ConvertResponse | null = null;
let lastFileName = "";
const tracker = new PreviewTracker();
const flight = new SingleFlight();
const viewer = new MeshViewer(meshContainer);

function readParams(): ConvertParams {
  return {
    stockRadius: fieldInputs.stockRadius.value,
    passes: fieldInputs.passes.value,
    stepsPerRev: fieldInputs.stepsPerRev.value,
    overlap: fieldInputs.overlap.value,
    tolerance: fieldInputs.tolerance.value,
    feedOverride: fieldInputs.feedOverride.value,
    diameterBasis: basisSelect.value === "stock" ? "stock" : "toolpath",
  };
}

function currentSignature(): string {
  return requestSignature(
    currentFile?.name ?? "",
    currentFile?.size ?? 0,
    readParams(),
  );
}

function setFieldError(field: string, message: string | null): void {
  const slot = document.querySelector(`[data-error-for="${field}"]`);
  if (slot !== null) slot.textContent = message ?? "";
}

function clearFieldErrors(): void {
  for (const slot of document.querySelectorAll("[data-error-for]")) {
    slot.textContent = "";
  }
}

function setStatus(message: string, isError: boolean): void {
  statusEl.textContent = message;
  statusEl.classList.toggle("error", isError);
}

function refreshForm(): void {
  const params = readParams();
  clearFieldErrors();
  setFieldError("file", validateFile(currentFile));
  const errors = validateParams(params);
  for (const [field, message] of Object.entries(errors)) {
    setFieldError(field, message);
  }
  convertBtn.disabled = !formIsValid(currentFile, params) || flight.pending;
  previewSection.classList.toggle("stale", tracker.isStale(currentSignature()));
}

function acceptFile(file: File): void {
  currentFile = file;
  fileNameEl.textContent = `${file.name} (${(file.size / 1024).toFixed(1)} KB)`;
  setStatus("", false);
  refreshForm();
}

function renderResult(response: ConvertResponse): void {
  lastResponse = response;
  lastFileName = currentFile?.name ?? "";
  // the displayed plan is the server's own wording, never recomputed
  captionEl.textContent = response.plan.summary;
  planDetailEl.textContent =
    `pass width ${response.plan.pass_width.toFixed(3)} mm, ` +
    `predicted sagitta ${response.plan.predicted_sagitta.toFixed(4)} mm, ` +
    `tool ${response.metadata.tool_diameter} mm (${response.metadata.tool_diameter_source})`;

  warningsEl.replaceChildren(
    ...response.warnings.map((text) => {
      const item = document.createElement("li");
      item.textContent = text;
      return item;
    }),
  );

  plotCanvas.width = plotCanvas.clientWidth || 480;
  plotCanvas.height = plotCanvas.clientHeight || 360;
  const ctx = plotCanvas.getContext("2d");
  if (ctx !== null) {
    drawPlot(ctx, response.preview_2d, plotCanvas.width, plotCanvas.height);
  }

  viewer.setMesh(response.mesh);
  meshNoteEl.textContent =
    response.mesh === null ? "no 3D preview for this program" : "";

  downloadGcodeBtn.disabled = false;
  downloadPngBtn.disabled = false;
  previewSection.classList.remove("hidden");
}

async function convert(): Promise<void> {
  if (currentFile === null) return;
  const signature = currentSignature();
  const signal = flight.begin();
  refreshForm();
  setStatus("converting...", false);
  const outcome = await requestConversion(currentFile, readParams(), { signal });
  if (outcome.kind === "superseded") return;
  flight.finish();

  switch (outcome.kind) {
    case "ok":
      tracker.markConverted(signature);
      renderResult(outcome.response);
      setStatus("", false);
      break;
    case "invalid-params": {
      for (const [field, message] of Object.entries(outcome.fields)) {
        setFieldError(fieldNameFromServer(field), message);
      }
      setStatus("the server rejected the parameters", true);
      break;
    }
    case "too-large":
      setFieldError("file", `file exceeds the server limit of ${outcome.maxFileBytes} bytes`);
      setStatus("upload too large", true);
      break;
    case "gcode-rejected": {
      const fatal = outcome.report.find((v) => v.severity === "fatal");
      const where = fatal?.line != null ? ` (line ${fatal.line})` : "";
      setStatus(`${outcome.message}${where}`, true);
      break;
    }
    case "network-error":
      setStatus(outcome.message, true);
      break;
  }
  refreshForm();
}

function fieldNameFromServer(field: string): string {
  const mapping: Record<string, string> = {
    stock_radius: "stockRadius",
    steps_per_rev: "stepsPerRev",
    feed_override: "feedOverride",
    diameter_basis: "diameterBasis",
  };
  return mapping[field] ?? field;
}

function wireDropZone(): void {
  for (const name of ["dragenter", "dragover", "dragleave", "drop"]) {
    dropZone.addEventListener(name, (e) => {
      e.preventDefault();
      e.stopPropagation();
    });
  }
  dropZone.addEventListener("dragover", () => dropZone.classList.add("active"));
  dropZone.addEventListener("dragleave", () => dropZone.classList.remove("active"));
  dropZone.addEventListener("drop", (e) => {
    dropZone.classList.remove("active");
    const files = (e as DragEvent).dataTransfer?.files;
    if (files !== undefined && files.length > 0 && files[0] !== undefined) {
      acceptFile(files[0]);
    }
  });
  dropZone.addEventListener("click", () => fileInput.click());
  fileInput.addEventListener("change", () => {
    const file = fileInput.files?.[0];
    if (file !== undefined) acceptFile(file);
  });
}

function wireForm(): void {
  for (const input of Object.values(fieldInputs)) {
    input.addEventListener("input", refreshForm);
  }
  basisSelect.addEventListener("change", refreshForm);
  convertBtn.addEventListener("click", () => void convert());
  downloadGcodeBtn.addEventListener("click", () => {
    if (lastResponse === null) return;
    triggerDownload(gcodeBlob(lastResponse.gcode), suggestOutputName(lastFileName));
  });
  downloadPngBtn.addEventListener("click", () => {
    if (lastResponse === null) return;
    downloadDataUrl(viewer.captureImage(), "rotary-preview.png");
  });
  window.addEventListener("resize", () => viewer.resize());
}

wireDropZone();
wireForm();
refreshForm();
