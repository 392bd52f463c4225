// File-saving helpers.  The G-code blob is built from the exact string
// the server returned; nothing re-encodes or reflows it, so the saved
// file is byte-identical to the response.

export function gcodeBlob(gcode: string): Blob {
  return new Blob([gcode], { type: "text/plain" });
}

/** part.nc -> part_rotary.nc; no extension gets .nc appended. */
export function suggestOutputName(inputName: string): string {
  const dot = inputName.lastIndexOf(".");
  if (dot <= 0) return `${inputName || "converted"}_rotary.nc`;
  return `${inputName.slice(0, dot)}_rotary${inputName.slice(dot)}`;
}

export function triggerDownload(blob: Blob, filename: string): void {
  const url = URL.createObjectURL(blob);
  const anchor = document.createElement("a");
  anchor.href = url;
  anchor.download = filename;
  anchor.click();
  URL.revokeObjectURL(url);
}

export function downloadDataUrl(dataUrl: string, filename: string): void {
  const anchor = document.createElement("a");
  anchor.href = dataUrl;
  anchor.download = filename;
  anchor.click();
}
