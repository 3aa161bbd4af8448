/** Typed client over the citykpi service JSON contracts. */

export interface ColumnSummary {
  name: string;
  role: string;
  non_null: number;
  missing: number;
  mean: number | null;
  std: number | null;
  min: number | null;
  max: number | null;
}

export interface DatasetSummary {
  row_count: number;
  columns: ColumnSummary[];
}

export interface ModelEntry {
  id: string;
  kind: string;
  seed: number;
  test_fraction: number;
  accuracy: number;
  auc: number;
  log_loss: number;
  trained_at: string;
}

export interface ClassMetrics {
  precision: number;
  recall: number;
  f1: number;
  support: number;
}

export interface Report {
  classes: { "0": ClassMetrics; "1": ClassMetrics };
  accuracy: number;
  macro_avg: ClassMetrics;
  weighted_avg: ClassMetrics;
  zero_division: boolean;
}

export interface ModelMetrics {
  threshold: number;
  report: Report;
  confusion: { counts: [[number, number], [number, number]] };
  roc: { points: [number, number][]; thresholds: (number | null)[] };
  auc: number;
  log_loss: number;
  model_id: string;
  kind: string;
}

export interface AnalyticsReport {
  correlations: { names: string[]; values: number[][]; constant_columns: string[] };
  groups: {
    groups: Record<string, { count: number; means: Record<string, number | null> }>;
    empty_groups: number[];
  } | null;
  histograms: Record<string, { bin_edges: number[]; counts: number[] }>;
  outliers: Record<string, number[]>;
}

export interface ForecastStep {
  point: number;
  lower: number;
  upper: number;
  margin: number;
}

export interface ForecastResult {
  steps: ForecastStep[];
  confidence: number;
  level: number;
  trend: number;
  column: string;
  horizon: number;
  n_observations: number;
  /** [t, value] pairs; present when requested with includeHistory. */
  series?: [number, number][];
}

export interface JobRecord {
  id: string;
  kind: string;
  status: "queued" | "running" | "done" | "failed";
  result: string | null;
  error: string | null;
}

export interface TrainRequest {
  model_kind: string;
  seed?: number;
  test_fraction?: number;
  hyperparameters?: Record<string, unknown>;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

async function parseError(response: Response): Promise<never> {
  let code = "Unknown";
  let message = response.statusText;
  try {
    const body = await response.json();
    if (body && body.error) {
      code = body.error.code;
      message = body.error.message;
    }
  } catch {
    // non-JSON error body
  }
  throw new ApiError(response.status, code, message);
}

export class ApiClient {
  constructor(readonly baseUrl: string) {}

  private async get<T>(path: string): Promise<T> {
    const response = await fetch(this.baseUrl + path);
    if (!response.ok) await parseError(response);
    return response.json() as Promise<T>;
  }

  summary(): Promise<DatasetSummary> {
    return this.get("/api/summary");
  }

  models(): Promise<ModelEntry[]> {
    return this.get<{ models: ModelEntry[] }>("/api/models").then((d) => d.models);
  }

  metrics(modelId: string, threshold: number): Promise<ModelMetrics> {
    return this.get(
      `/api/models/${encodeURIComponent(modelId)}/metrics?threshold=${threshold}`,
    );
  }

  analytics(): Promise<AnalyticsReport> {
    return this.get("/api/analytics");
  }

  forecast(
    column: string,
    horizon: number,
    confidence: number,
    includeHistory = false,
  ): Promise<ForecastResult> {
    const params = new URLSearchParams({
      column,
      horizon: String(horizon),
      confidence: String(confidence),
    });
    if (includeHistory) params.set("history", "true");
    return this.get(`/api/forecast?${params}`);
  }

  async train(request: TrainRequest): Promise<JobRecord> {
    const response = await fetch(this.baseUrl + "/api/train", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(request),
    });
    if (!response.ok) await parseError(response);
    return response.json();
  }

  job(id: string): Promise<JobRecord> {
    return this.get(`/api/jobs/${encodeURIComponent(id)}`);
  }

  /** Poll a training job until it settles. */
  async waitForJob(id: string, timeoutMs = 60_000, intervalMs = 150): Promise<JobRecord> {
    const deadline = Date.now() + timeoutMs;
    for (;;) {
      const record = await this.job(id);
      if (record.status === "done" || record.status === "failed") return record;
      if (Date.now() > deadline) throw new Error(`job ${id} timed out`);
      await new Promise((r) => setTimeout(r, intervalMs));
    }
  }
}

/** API base from ?api=... (build-free configuration), else same origin. */
export function resolveBaseUrl(locationSearch: string, origin: string): string {
  const fromQuery = new URLSearchParams(locationSearch).get("api");
  return (fromQuery ?? origin).replace(/\/$/, "");
}
