// Bookkeeping the UI needs around a conversion: whether the preview on
// screen still corresponds to the form, and making sure at most one
// request is in flight.

import type { ConvertParams } from "./types.js";

/**
 * Identity of one conversion request.  Two requests with equal
 * signatures would produce identical results, so a preview is stale
 * exactly when the current signature differs from the converted one.
 */
export function requestSignature(
  fileName: string,
  fileSize: number,
  params: ConvertParams,
): string {
  return JSON.stringify([
    fileName,
    fileSize,
    params.stockRadius.trim(),
    params.passes.trim(),
    params.stepsPerRev.trim(),
    params.overlap.trim(),
    params.tolerance.trim(),
    params.feedOverride.trim(),
    params.diameterBasis,
  ]);
}

export class PreviewTracker {
  private convertedSignature: string | null = null;

  markConverted(signature: string): void {
    this.convertedSignature = signature;
  }

  clear(): void {
    this.convertedSignature = null;
  }

  hasResult(): boolean {
    return this.convertedSignature !== null;
  }

  /** A preview exists but the form has moved on since it was made. */
  isStale(currentSignature: string): boolean {
    return (
      this.convertedSignature !== null &&
      this.convertedSignature !== currentSignature
    );
  }
}

/** One in-flight request at a time; starting a new one cancels the old. */
export class SingleFlight {
  private controller: AbortController | null = null;

  begin(): AbortSignal {
    this.controller?.abort();
    this.controller = new AbortController();
    return this.controller.signal;
  }

  finish(): void {
    this.controller = null;
  }

  get pending(): boolean {
    return this.controller !== null;
  }
}
