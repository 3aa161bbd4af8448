/** Dashboard state and the debounced, last-write-wins threshold controller. */

import type { ApiClient, ModelMetrics } from "./api.js";

export interface DashboardState {
  selectedModelId: string | null;
  threshold: number;
  forecastColumn: string | null;
  horizon: number;
  confidence: number;
  activePanel: "overview" | "models" | "forecast";
}

export function initialState(): DashboardState {
  return {
    selectedModelId: null,
    threshold: 0.5,
    forecastColumn: null,
    horizon: 5,
    confidence: 0.95,
    activePanel: "overview",
  };
}

export function clampThreshold(value: number): number {
  if (Number.isNaN(value)) return 0.5;
  return Math.max(0, Math.min(1, value));
}

/**
 * Debounces slider input and drops stale responses, so the final rendered
 * metrics always correspond to the last threshold the user picked.
 */
export class ThresholdController {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private requestSeq = 0;
  private appliedSeq = 0;

  constructor(
    private readonly api: ApiClient,
    private readonly apply: (metrics: ModelMetrics) => void,
    private readonly onError: (error: unknown) => void,
    readonly debounceMs = 150,
  ) {}

  set(modelId: string, threshold: number): void {
    if (this.timer !== null) clearTimeout(this.timer);
    const t = clampThreshold(threshold);
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.fire(modelId, t);
    }, this.debounceMs);
  }

  /** Fetch immediately (used on model selection and in tests). */
  async fire(modelId: string, threshold: number): Promise<void> {
    const seq = ++this.requestSeq;
    try {
      const metrics = await this.api.metrics(modelId, threshold);
      if (seq < this.appliedSeq) return; // a newer response already rendered
      this.appliedSeq = seq;
      this.apply(metrics);
    } catch (error) {
      if (seq >= this.appliedSeq) this.onError(error);
    }
  }

  /** Flush a pending debounce (test hook). */
  hasPending(): boolean {
    return this.timer !== null;
  }
}
