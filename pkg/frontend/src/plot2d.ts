// Draws the toolpath-plot document on a 2D canvas: X to the right, Z
// up, feed moves solid, rapids dashed.  The fitting math is exported on
// its own so it can be checked without a canvas.

import type { PlotDocument } from "./types.js";

export interface ViewTransform {
  scale: number;
  offsetX: number;
  offsetY: number;
}

/**
 * Uniform scale-and-center of the plot bounds into a width x height
 * canvas, with a margin on every side.  Canvas y runs downward, so the
 * vertical axis is flipped here and only here.
 */
export function fitView(
  doc: PlotDocument,
  width: number,
  height: number,
  margin = 24,
): ViewTransform {
  const [xMin, xMax] = doc.bounds.x;
  const [zMin, zMax] = doc.bounds.z;
  const spanX = xMax - xMin;
  const spanZ = zMax - zMin;
  const usableW = Math.max(1, width - 2 * margin);
  const usableH = Math.max(1, height - 2 * margin);
  const scale =
    spanX <= 0 && spanZ <= 0
      ? 1
      : Math.min(
          spanX > 0 ? usableW / spanX : Infinity,
          spanZ > 0 ? usableH / spanZ : Infinity,
        );
  const centerX = (xMin + xMax) / 2;
  const centerZ = (zMin + zMax) / 2;
  return {
    scale,
    offsetX: width / 2 - centerX * scale,
    offsetY: height / 2 + centerZ * scale,
  };
}

export function toCanvas(
  point: [number, number],
  view: ViewTransform,
): [number, number] {
  return [
    point[0] * view.scale + view.offsetX,
    -point[1] * view.scale + view.offsetY,
  ];
}

export const FEED_STYLE = { stroke: "#2563eb", dash: [] as number[], width: 2 };
export const RAPID_STYLE = { stroke: "#9ca3af", dash: [6, 4], width: 1 };

/** Minimal surface of CanvasRenderingContext2D the plot needs. */
export interface PlotContext {
  clearRect(x: number, y: number, w: number, h: number): void;
  beginPath(): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  stroke(): void;
  setLineDash(segments: number[]): void;
  strokeStyle: string | CanvasGradient | CanvasPattern;
  lineWidth: number;
}

export function drawPlot(
  ctx: PlotContext,
  doc: PlotDocument,
  width: number,
  height: number,
): void {
  ctx.clearRect(0, 0, width, height);
  const view = fitView(doc, width, height);
  for (const kind of ["rapid", "feed"] as const) {
    const style = kind === "feed" ? FEED_STYLE : RAPID_STYLE;
    ctx.strokeStyle = style.stroke;
    ctx.lineWidth = style.width;
    ctx.setLineDash(style.dash);
    ctx.beginPath();
    for (const segment of doc.segments) {
      if (segment.kind !== kind) continue;
      const [sx, sy] = toCanvas(segment.start, view);
      const [ex, ey] = toCanvas(segment.end, view);
      ctx.moveTo(sx, sy);
      ctx.lineTo(ex, ey);
    }
    ctx.stroke();
  }
  ctx.setLineDash([]);
}
