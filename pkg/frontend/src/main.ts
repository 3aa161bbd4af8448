/** Wires the panels together: read-only analytics, write-capable training. */

import { ApiClient, resolveBaseUrl } from "./api.js";
import type { ModelMetrics } from "./api.js";
import {
  renderBanner,
  renderComparison,
  renderForecast,
  renderHeatmap,
  renderMetricsPanel,
  renderOverview,
} from "./render.js";
import { ThresholdController, clampThreshold, initialState } from "./state.js";
import {
  buildComparison,
  buildForecastChart,
  buildHeatmap,
  buildMetricsPanel,
} from "./viewmodels.js";

const state = initialState();
const api = new ApiClient(resolveBaseUrl(location.search, location.origin));

const $ = (id: string) => document.getElementById(id) as HTMLElement;

const thresholdController = new ThresholdController(
  api,
  (metrics: ModelMetrics) => {
    renderMetricsPanel($("metrics-panel"), buildMetricsPanel(metrics));
    renderBanner($("metrics-banner"), null);
  },
  () => renderBanner($("metrics-banner"), "showing stale data: metrics fetch failed"),
);

async function refreshOverview(): Promise<void> {
  const summary = await api.summary();
  renderOverview($("overview-panel"), summary);
  const select = $("forecast-column") as HTMLSelectElement;
  select.replaceChildren();
  for (const column of summary.columns.filter((c) => c.role === "feature")) {
    const option = document.createElement("option");
    option.value = column.name;
    option.textContent = column.name;
    select.append(option);
  }
  if (!state.forecastColumn && select.options.length > 0) {
    state.forecastColumn = select.options[0].value;
  }
}

async function refreshAnalytics(): Promise<void> {
  const analytics = await api.analytics();
  renderHeatmap($("heatmap-panel"), buildHeatmap(analytics), analytics.correlations.names);
}

async function refreshModels(): Promise<void> {
  const models = await api.models();
  const view = buildComparison(models);
  renderComparison($("comparison-panel"), view, selectModel);
  if (!state.selectedModelId && view.bars.length > 0) {
    selectModel(view.bars[0].id);
  }
}

function selectModel(id: string): void {
  state.selectedModelId = id;
  $("selected-model").textContent = id;
  void thresholdController.fire(id, state.threshold);
}

async function refreshForecast(): Promise<void> {
  if (!state.forecastColumn) return;
  renderBanner($("forecast-banner"), null);
  try {
    const result = await api.forecast(
      state.forecastColumn, state.horizon, state.confidence, true,
    );
    renderForecast($("forecast-panel"), buildForecastChart(result, result.series ?? []));
  } catch (error) {
    const message =
      error instanceof Error ? error.message : "series too short for forecasting";
    renderBanner($("forecast-banner"), message);
  }
}

function bindControls(): void {
  const slider = $("threshold-slider") as HTMLInputElement;
  slider.addEventListener("input", () => {
    state.threshold = clampThreshold(Number(slider.value));
    $("threshold-value").textContent = state.threshold.toFixed(2);
    if (state.selectedModelId) {
      thresholdController.set(state.selectedModelId, state.threshold);
    }
  });

  $("train-button").addEventListener("click", async () => {
    const kind = ($("train-kind") as HTMLSelectElement).value;
    const seed = Number(($("train-seed") as HTMLInputElement).value) || 0;
    renderBanner($("train-banner"), `training ${kind}...`);
    try {
      const job = await api.train({ model_kind: kind, seed, test_fraction: 0.3 });
      const done = await api.waitForJob(job.id);
      renderBanner(
        $("train-banner"),
        done.status === "done" ? `trained ${done.result}` : `failed: ${done.error}`,
      );
      await refreshModels();
    } catch (error) {
      renderBanner($("train-banner"), `train request failed: ${String(error)}`);
    }
  });

  const horizon = $("forecast-horizon") as HTMLInputElement;
  horizon.addEventListener("change", () => {
    state.horizon = Math.max(1, Number(horizon.value) || 1);
    void refreshForecast();
  });
  const confidence = $("forecast-confidence") as HTMLInputElement;
  confidence.addEventListener("change", () => {
    const v = Number(confidence.value);
    state.confidence = v > 0 && v < 1 ? v : 0.95;
    void refreshForecast();
  });
  ($("forecast-column") as HTMLSelectElement).addEventListener("change", (event) => {
    state.forecastColumn = (event.target as HTMLSelectElement).value;
    void refreshForecast();
  });
}

async function start(): Promise<void> {
  bindControls();
  try {
    await refreshOverview();
    await Promise.all([refreshAnalytics(), refreshModels(), refreshForecast()]);
  } catch (error) {
    renderBanner($("global-banner"), `API unreachable: ${String(error)}`);
  }
}

void start();
