/** Pure view-model builders. Every number shown on screen is taken verbatim
 * from an API payload; this module only arranges, sorts, and colors. */

import type {
  AnalyticsReport,
  ForecastResult,
  ModelEntry,
  ModelMetrics,
} from "./api.js";

export interface ComparisonBar {
  id: string;
  kind: string;
  accuracy: number;
  auc: number;
  logLoss: number;
  highlighted: boolean;
}

export interface ComparisonView {
  bars: ComparisonBar[];
  bestIds: string[];
  empty: boolean;
}

/** Bars sorted descending by accuracy; every argmax model highlighted. */
export function buildComparison(models: ModelEntry[]): ComparisonView {
  if (models.length === 0) return { bars: [], bestIds: [], empty: true };
  const best = Math.max(...models.map((m) => m.accuracy));
  const bars = [...models]
    .sort((a, b) => b.accuracy - a.accuracy || a.id.localeCompare(b.id))
    .map((m) => ({
      id: m.id,
      kind: m.kind,
      accuracy: m.accuracy,
      auc: m.auc,
      logLoss: m.log_loss,
      highlighted: m.accuracy === best,
    }));
  return { bars, bestIds: bars.filter((b) => b.highlighted).map((b) => b.id), empty: false };
}

export interface ConfusionCell {
  actual: 0 | 1;
  predicted: 0 | 1;
  count: number;
  correct: boolean;
}

export interface MetricsPanelView {
  threshold: number;
  cells: ConfusionCell[];
  accuracy: number;
  auc: number;
  logLoss: number;
  rows: Array<{
    label: string;
    precision: number;
    recall: number;
    f1: number;
    support: number;
  }>;
  rocPoints: [number, number][];
}

/** Confusion matrix + report rows, straight from one /metrics payload. */
export function buildMetricsPanel(metrics: ModelMetrics): MetricsPanelView {
  const counts = metrics.confusion.counts;
  const cells: ConfusionCell[] = [];
  for (const actual of [0, 1] as const) {
    for (const predicted of [0, 1] as const) {
      cells.push({
        actual,
        predicted,
        count: counts[actual][predicted],
        correct: actual === predicted,
      });
    }
  }
  const report = metrics.report;
  const rows = [
    { label: "class 0", ...report.classes["0"] },
    { label: "class 1", ...report.classes["1"] },
    { label: "macro avg", ...report.macro_avg },
    { label: "weighted avg", ...report.weighted_avg },
  ];
  return {
    threshold: metrics.threshold,
    cells,
    accuracy: report.accuracy,
    auc: metrics.auc,
    logLoss: metrics.log_loss,
    rows,
    rocPoints: metrics.roc.points,
  };
}

export interface HeatmapCell {
  row: number;
  col: number;
  rowName: string;
  colName: string;
  value: number;
  color: string;
}

/** Symmetric diverging scale over [-1, 1]: blue below zero, red above. */
export function correlationColor(value: number): string {
  const v = Math.max(-1, Math.min(1, value));
  const fade = 255 - Math.round(Math.abs(v) * 200);
  return v >= 0 ? `rgb(255, ${fade}, ${fade})` : `rgb(${fade}, ${fade}, 255)`;
}

export function buildHeatmap(analytics: AnalyticsReport): HeatmapCell[] {
  const { names, values } = analytics.correlations;
  const cells: HeatmapCell[] = [];
  names.forEach((rowName, i) => {
    names.forEach((colName, j) => {
      cells.push({
        row: i,
        col: j,
        rowName,
        colName,
        value: values[i][j],
        color: correlationColor(values[i][j]),
      });
    });
  });
  return cells;
}

export interface ForecastChartView {
  history: Array<{ t: number; value: number }>;
  forecast: Array<{ t: number; point: number; lower: number; upper: number }>;
  tMin: number;
  tMax: number;
  yMin: number;
  yMax: number;
}

/** History line plus forecast band. Band widths must be non-decreasing. */
export function buildForecastChart(
  result: ForecastResult,
  series: [number, number][],
): ForecastChartView {
  const history = series.map(([t, value]) => ({ t, value }));
  const start = history.length > 0 ? history[history.length - 1].t : -1;
  const forecast = result.steps.map((step, i) => ({
    t: start + 1 + i,
    point: step.point,
    lower: step.lower,
    upper: step.upper,
  }));
  const ys = [
    ...history.map((p) => p.value),
    ...forecast.flatMap((p) => [p.lower, p.upper]),
  ];
  const ts = [...history.map((p) => p.t), ...forecast.map((p) => p.t)];
  return {
    history,
    forecast,
    tMin: Math.min(...ts),
    tMax: Math.max(...ts),
    yMin: Math.min(...ys),
    yMax: Math.max(...ys),
  };
}

export function formatNumber(value: number | null, digits = 4): string {
  if (value === null || Number.isNaN(value)) return "–";
  return value.toFixed(digits);
}
