// @vitest-environment jsdom

import { describe, expect, it } from "vitest";

import {
  renderBanner,
  renderComparison,
  renderForecast,
  renderHeatmap,
  renderMetricsPanel,
  renderOverview,
} from "../render.js";
import {
  buildComparison,
  buildForecastChart,
  buildHeatmap,
  buildMetricsPanel,
} from "../viewmodels.js";
import type { ModelEntry, ModelMetrics } from "../api.js";

const METRICS: ModelMetrics = {
  threshold: 0.5,
  report: {
    classes: {
      "0": { precision: 0.62, recall: 0.56, f1: 0.59, support: 9 },
      "1": { precision: 0.2, recall: 0.25, f1: 0.22, support: 4 },
    },
    accuracy: 0.4615,
    macro_avg: { precision: 0.41, recall: 0.4, f1: 0.41, support: 13 },
    weighted_avg: { precision: 0.49, recall: 0.46, f1: 0.48, support: 13 },
    zero_division: false,
  },
  confusion: { counts: [[5, 4], [3, 1]] },
  roc: { points: [[0, 0], [1, 1]], thresholds: [null, 0.5] },
  auc: 0.475,
  log_loss: 0.9,
  model_id: "m",
  kind: "logreg",
};

function host(): HTMLElement {
  const node = document.createElement("div");
  document.body.append(node);
  return node;
}

describe("render smoke", () => {
  it("overview cards and stats table", () => {
    const target = host();
    renderOverview(target, {
      row_count: 1158,
      columns: [
        { name: "a", role: "feature", non_null: 153, missing: 1005, mean: 7.7, std: 1, min: 5, max: 10 },
        { name: "governance", role: "target", non_null: 1158, missing: 0, mean: 0.45, std: 0.5, min: 0, max: 1 },
      ],
    });
    expect(target.querySelector(".card-value")?.textContent).toBe("1158");
    expect(target.querySelectorAll("table.stats tr")).toHaveLength(3);
  });

  it("confusion grid shows the four counts", () => {
    const target = host();
    renderMetricsPanel(target, buildMetricsPanel(METRICS));
    const cells = [...target.querySelectorAll(".confusion .cell")].map(
      (c) => c.textContent,
    );
    expect(cells).toEqual(["5", "4", "3", "1"]);
    expect(target.querySelector(".metric-line")?.textContent).toContain("0.4750");
    expect(target.querySelectorAll("table.report tr")).toHaveLength(5);
    expect(target.querySelector("svg.roc")).not.toBeNull();
  });

  it("comparison bars mark ties and react to clicks", () => {
    const models: ModelEntry[] = [
      { id: "a", kind: "svm", seed: 0, test_fraction: 0.3, accuracy: 0.69, auc: 0.7, log_loss: 1, trained_at: "" },
      { id: "b", kind: "bnb", seed: 0, test_fraction: 0.3, accuracy: 0.69, auc: 0.8, log_loss: 1, trained_at: "" },
      { id: "c", kind: "tree", seed: 0, test_fraction: 0.3, accuracy: 0.5, auc: 0.5, log_loss: 1, trained_at: "" },
    ];
    const target = host();
    const clicked: string[] = [];
    renderComparison(target, buildComparison(models), (id) => clicked.push(id));
    expect(target.querySelectorAll(".bar-row.best")).toHaveLength(2);
    (target.querySelector(".bar-row") as HTMLElement).click();
    expect(clicked).toHaveLength(1);
  });

  it("empty comparison renders the empty state", () => {
    const target = host();
    renderComparison(target, buildComparison([]), () => {});
    expect(target.querySelector(".empty")?.textContent).toContain("No trained models");
  });

  it("heatmap draws one rect per cell", () => {
    const target = host();
    const analytics = {
      correlations: {
        names: ["a", "b", "c"],
        values: [
          [1, 0.5, -0.77],
          [0.5, 1, 0],
          [-0.77, 0, 1],
        ],
        constant_columns: [],
      },
      groups: null,
      histograms: {},
      outliers: {},
    };
    renderHeatmap(target, buildHeatmap(analytics), analytics.correlations.names);
    expect(target.querySelectorAll("rect")).toHaveLength(9);
  });

  it("forecast chart draws band, history, forecast", () => {
    const target = host();
    const view = buildForecastChart(
      {
        steps: [
          { point: 6, lower: 5, upper: 7, margin: 1 },
          { point: 7, lower: 5.5, upper: 8.5, margin: 1.5 },
        ],
        confidence: 0.95,
        level: 5,
        trend: 1,
        column: "x",
        horizon: 2,
        n_observations: 3,
      },
      [[0, 4], [1, 4.5], [2, 5]],
    );
    renderForecast(target, view);
    expect(target.querySelectorAll("polygon")).toHaveLength(1);
    expect(target.querySelectorAll("path")).toHaveLength(2);
  });

  it("banner toggles", () => {
    const target = host();
    renderBanner(target, "stale data");
    expect(target.querySelector(".banner")?.textContent).toBe("stale data");
    renderBanner(target, null);
    expect(target.querySelector(".banner")).toBeNull();
  });
});
