// Shapes of the documents the conversion service returns, as described
// in docs/formats.md.  The client treats these as read-only: it never
// recomputes a plan or edits G-code, it only renders what arrived.

export type MetadataSource = "comment" | "user" | "fallback";

export interface PlanSummary {
  num_passes: number;
  angle_per_pass: number;
  pass_width: number;
  basis_diameter: number;
  predicted_sagitta: number;
  source: "overlap" | "tolerance" | "explicit";
  summary: string;
}

export interface ToolMetadata {
  tool_diameter: number;
  tool_diameter_source: MetadataSource;
  feedrate: number;
  feedrate_source: MetadataSource;
}

export interface PlotSegment {
  kind: "rapid" | "feed";
  start: [number, number];
  end: [number, number];
}

export interface PlotDocument {
  format: "toolpath-plot";
  axes: { horizontal: string; vertical: string };
  bounds: { x: [number, number]; z: [number, number] };
  segments: PlotSegment[];
}

export interface MeshDocument {
  format: "revolved-mesh";
  stations: number;
  profile_points: number;
  angle_per_station_deg: number;
  vertices: [number, number, number][];
  faces: [number, number, number][];
}

export interface ConvertResponse {
  plan: PlanSummary;
  metadata: ToolMetadata;
  warnings: string[];
  preview_2d: PlotDocument;
  mesh: MeshDocument | null;
  gcode: string;
  stats: Record<string, number>;
}

export interface ReportViolation {
  severity: "fatal" | "warning";
  code: string;
  message: string;
  line: number | null;
}

/** Form fields as the user typed them; empty string means "not given". */
export interface ConvertParams {
  stockRadius: string;
  passes: string;
  stepsPerRev: string;
  overlap: string;
  tolerance: string;
  feedOverride: string;
  diameterBasis: "toolpath" | "stock";
}

export const EMPTY_PARAMS: ConvertParams = {
  stockRadius: "",
  passes: "",
  stepsPerRev: "",
  overlap: "",
  tolerance: "",
  feedOverride: "",
  diameterBasis: "toolpath",
};

export type ConvertOutcome =
  | { kind: "ok"; response: ConvertResponse }
  | { kind: "invalid-params"; fields: Record<string, string> }
  | { kind: "too-large"; maxFileBytes: number }
  | { kind: "gcode-rejected"; message: string; report: ReportViolation[] }
  | { kind: "network-error"; message: string }
  | { kind: "superseded" };
