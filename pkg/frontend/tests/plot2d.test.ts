import { describe, expect, it } from "vitest";

import {
  FEED_STYLE,
  RAPID_STYLE,
  drawPlot,
  fitView,
  toCanvas,
  type PlotContext,
} from "../src/plot2d.js";
import type { PlotDocument } from "../src/types.js";

function doc(
  bounds: { x: [number, number]; z: [number, number] },
  segments: PlotDocument["segments"] = [],
): PlotDocument {
  return {
    format: "toolpath-plot",
    axes: { horizontal: "X", vertical: "Z" },
    bounds,
    segments,
  };
}

describe("fitView", () => {
  it("centers the bounds in the canvas", () => {
    const view = fitView(doc({ x: [0, 10], z: [0, 10] }), 200, 200, 20);
    expect(toCanvas([5, 5], view)).toEqual([100, 100]);
  });

  it("scales uniformly to the tighter axis with the margin applied", () => {
    const view = fitView(doc({ x: [0, 40], z: [0, 10] }), 200, 200, 20);
    // x span 40 into 160 usable px -> 4 px/mm governs both axes
    expect(view.scale).toBeCloseTo(4);
    expect(toCanvas([0, 0], view)[0]).toBeCloseTo(20);
    expect(toCanvas([40, 0], view)[0]).toBeCloseTo(180);
  });

  it("flips the vertical axis so +Z is up", () => {
    const view = fitView(doc({ x: [0, 10], z: [0, 10] }), 200, 200, 20);
    const [, yLow] = toCanvas([5, 0], view);
    const [, yHigh] = toCanvas([5, 10], view);
    expect(yHigh).toBeLessThan(yLow);
  });

  it("handles a degenerate single-point bound without dividing by zero", () => {
    const view = fitView(doc({ x: [0, 0], z: [0, 0] }), 200, 100, 20);
    expect(view.scale).toBe(1);
    expect(toCanvas([0, 0], view)).toEqual([100, 50]);
  });

  it("handles a flat horizontal profile", () => {
    const view = fitView(doc({ x: [0, 20], z: [5, 5] }), 120, 100, 10);
    expect(view.scale).toBeCloseTo(5); // only x constrains
    expect(toCanvas([10, 5], view)).toEqual([60, 50]);
  });
});

interface Call {
  op: string;
  args: unknown[];
}

function recordingContext(): { ctx: PlotContext; calls: Call[] } {
  const calls: Call[] = [];
  const record =
    (op: string) =>
    (...args: unknown[]) => {
      calls.push({ op, args });
    };
  const ctx: PlotContext = {
    clearRect: record("clearRect"),
    beginPath: record("beginPath"),
    moveTo: record("moveTo"),
    lineTo: record("lineTo"),
    stroke: record("stroke"),
    setLineDash: record("setLineDash"),
    strokeStyle: "",
    lineWidth: 0,
  };
  return { ctx, calls };
}

describe("drawPlot", () => {
  const plot = doc({ x: [0, 10], z: [0, 5] }, [
    { kind: "rapid", start: [0, 0], end: [0, 5] },
    { kind: "feed", start: [0, 5], end: [10, 5] },
    { kind: "feed", start: [10, 5], end: [10, 0] },
  ]);

  it("clears the canvas before drawing", () => {
    const { ctx, calls } = recordingContext();
    drawPlot(ctx, plot, 200, 100);
    expect(calls[0]).toEqual({ op: "clearRect", args: [0, 0, 200, 100] });
  });

  it("draws rapids dashed and feeds solid", () => {
    const { ctx, calls } = recordingContext();
    drawPlot(ctx, plot, 200, 100);
    const dashCalls = calls
      .filter((c) => c.op === "setLineDash")
      .map((c) => c.args[0]);
    expect(dashCalls[0]).toEqual(RAPID_STYLE.dash);
    expect(dashCalls[1]).toEqual(FEED_STYLE.dash);
    expect(dashCalls[2]).toEqual([]); // reset afterwards
  });

  it("emits one moveTo/lineTo pair per segment", () => {
    const { ctx, calls } = recordingContext();
    drawPlot(ctx, plot, 200, 100);
    expect(calls.filter((c) => c.op === "moveTo")).toHaveLength(3);
    expect(calls.filter((c) => c.op === "lineTo")).toHaveLength(3);
    expect(calls.filter((c) => c.op === "stroke")).toHaveLength(2);
  });

  it("draws nothing but still clears for an empty plot", () => {
    const { ctx, calls } = recordingContext();
    drawPlot(ctx, doc({ x: [0, 0], z: [0, 0] }), 200, 100);
    expect(calls.filter((c) => c.op === "moveTo")).toHaveLength(0);
    expect(calls[0]?.op).toBe("clearRect");
  });
});
