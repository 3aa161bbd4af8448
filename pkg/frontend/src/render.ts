/** DOM/SVG renderers. Layout only; values arrive pre-built in view models. */

import type { ColumnSummary, DatasetSummary } from "./api.js";
import type {
  ComparisonView,
  ForecastChartView,
  HeatmapCell,
  MetricsPanelView,
} from "./viewmodels.js";
import { formatNumber } from "./viewmodels.js";

const SVG_NS = "http://www.w3.org/2000/svg";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function svgEl(tag: string, attrs: Record<string, string | number>): SVGElement {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, String(value));
  }
  return node;
}

export function renderOverview(target: HTMLElement, summary: DatasetSummary): void {
  target.replaceChildren();
  const cards = el("div", "cards");
  const card = (label: string, value: string) => {
    const box = el("div", "card");
    box.append(el("div", "card-value", value), el("div", "card-label", label));
    return box;
  };
  cards.append(
    card("rows", String(summary.row_count)),
    card("columns", String(summary.columns.length)),
    card(
      "complete columns",
      String(summary.columns.filter((c: ColumnSummary) => c.missing === 0).length),
    ),
  );
  target.append(cards);

  const table = el("table", "stats");
  const head = el("tr");
  for (const h of ["column", "role", "non-null", "missing", "mean", "min", "max"]) {
    head.append(el("th", undefined, h));
  }
  table.append(head);
  for (const col of summary.columns) {
    const row = el("tr");
    row.append(
      el("td", undefined, col.name),
      el("td", undefined, col.role),
      el("td", "num", String(col.non_null)),
      el("td", "num", String(col.missing)),
      el("td", "num", formatNumber(col.mean, 2)),
      el("td", "num", formatNumber(col.min, 2)),
      el("td", "num", formatNumber(col.max, 2)),
    );
    table.append(row);
  }
  target.append(table);
}

export function renderHeatmap(
  target: HTMLElement,
  cells: HeatmapCell[],
  names: string[],
): void {
  target.replaceChildren();
  const size = 44;
  const margin = 150;
  const svg = svgEl("svg", {
    width: margin + names.length * size + 10,
    height: margin + names.length * size + 10,
    class: "heatmap",
  });
  for (const cell of cells) {
    svg.append(
      svgEl("rect", {
        x: margin + cell.col * size,
        y: margin + cell.row * size,
        width: size - 2,
        height: size - 2,
        fill: cell.color,
      }),
    );
    const label = svgEl("text", {
      x: margin + cell.col * size + size / 2,
      y: margin + cell.row * size + size / 2 + 4,
      "text-anchor": "middle",
      class: "cell-label",
    });
    label.textContent = cell.value.toFixed(2);
    svg.append(label);
  }
  names.forEach((name, i) => {
    const left = svgEl("text", {
      x: margin - 6,
      y: margin + i * size + size / 2 + 4,
      "text-anchor": "end",
      class: "axis-label",
    });
    left.textContent = name.slice(0, 24);
    const top = svgEl("text", {
      x: margin + i * size + size / 2,
      y: margin - 8,
      "text-anchor": "start",
      class: "axis-label",
      transform: `rotate(-45 ${margin + i * size + size / 2} ${margin - 8})`,
    });
    top.textContent = name.slice(0, 24);
    svg.append(left, top);
  });
  target.append(svg);
}

export function renderComparison(
  target: HTMLElement,
  view: ComparisonView,
  onSelect: (id: string) => void,
): void {
  target.replaceChildren();
  if (view.empty) {
    target.append(el("p", "empty", "No trained models yet. Train one above."));
    return;
  }
  for (const bar of view.bars) {
    const row = el("div", bar.highlighted ? "bar-row best" : "bar-row");
    row.dataset.modelId = bar.id;
    const label = el(
      "span",
      "bar-label",
      `${bar.kind}${bar.highlighted ? " ★" : ""}`,
    );
    const track = el("div", "bar-track");
    const fill = el("div", "bar-fill");
    fill.style.width = `${(bar.accuracy * 100).toFixed(1)}%`;
    fill.textContent = `acc ${formatNumber(bar.accuracy, 4)}`;
    const auc = el("span", "bar-auc", `auc ${formatNumber(bar.auc, 4)}`);
    track.append(fill);
    row.append(label, track, auc);
    row.addEventListener("click", () => onSelect(bar.id));
    target.append(row);
  }
}

export function renderMetricsPanel(target: HTMLElement, view: MetricsPanelView): void {
  target.replaceChildren();

  const grid = el("div", "confusion");
  grid.append(el("div", "corner", "actual \\ predicted"));
  grid.append(el("div", "head", "0"), el("div", "head", "1"));
  let cellIndex = 0;
  for (const actual of [0, 1]) {
    grid.append(el("div", "head", String(actual)));
    for (let p = 0; p < 2; p++) {
      const cell = view.cells[cellIndex++];
      grid.append(
        el("div", cell.correct ? "cell correct" : "cell wrong", String(cell.count)),
      );
    }
  }
  target.append(grid);

  const stats = el("p", "metric-line");
  stats.textContent =
    `accuracy ${formatNumber(view.accuracy, 4)} · ` +
    `AUC ${formatNumber(view.auc, 4)} · log loss ${formatNumber(view.logLoss, 4)}`;
  target.append(stats);

  const table = el("table", "report");
  const head = el("tr");
  for (const h of ["", "precision", "recall", "f1", "support"]) {
    head.append(el("th", undefined, h));
  }
  table.append(head);
  for (const row of view.rows) {
    const tr = el("tr");
    tr.append(
      el("td", undefined, row.label),
      el("td", "num", formatNumber(row.precision, 2)),
      el("td", "num", formatNumber(row.recall, 2)),
      el("td", "num", formatNumber(row.f1, 2)),
      el("td", "num", String(row.support)),
    );
    table.append(tr);
  }
  target.append(table);

  target.append(renderRoc(view.rocPoints));
}

function renderRoc(points: [number, number][]): SVGElement {
  const w = 180;
  const h = 180;
  const pad = 14;
  const svg = svgEl("svg", { width: w, height: h, class: "roc" });
  svg.append(
    svgEl("line", {
      x1: pad, y1: h - pad, x2: w - pad, y2: pad,
      class: "diagonal", stroke: "#bbb", "stroke-dasharray": "3,3",
    }),
  );
  const path = points
    .map(([fpr, tpr], i) => {
      const x = pad + fpr * (w - 2 * pad);
      const y = h - pad - tpr * (h - 2 * pad);
      return `${i === 0 ? "M" : "L"}${x.toFixed(1)},${y.toFixed(1)}`;
    })
    .join(" ");
  svg.append(svgEl("path", { d: path, fill: "none", stroke: "#0a6", "stroke-width": 2 }));
  return svg;
}

export function renderForecast(target: HTMLElement, view: ForecastChartView): void {
  target.replaceChildren();
  const w = 640;
  const h = 260;
  const pad = 30;
  const spanT = Math.max(view.tMax - view.tMin, 1);
  const spanY = Math.max(view.yMax - view.yMin, 1e-9);
  const sx = (t: number) => pad + ((t - view.tMin) / spanT) * (w - 2 * pad);
  const sy = (v: number) => h - pad - ((v - view.yMin) / spanY) * (h - 2 * pad);

  const svg = svgEl("svg", { width: w, height: h, class: "forecast" });

  if (view.forecast.length > 0) {
    const upper = view.forecast.map((p) => `${sx(p.t)},${sy(p.upper)}`);
    const lower = [...view.forecast].reverse().map((p) => `${sx(p.t)},${sy(p.lower)}`);
    svg.append(
      svgEl("polygon", {
        points: [...upper, ...lower].join(" "),
        class: "band",
        fill: "rgba(30, 120, 220, 0.18)",
        stroke: "none",
      }),
    );
  }

  const historyPath = view.history
    .map((p, i) => `${i === 0 ? "M" : "L"}${sx(p.t)},${sy(p.value)}`)
    .join(" ");
  svg.append(
    svgEl("path", { d: historyPath, fill: "none", stroke: "#333", "stroke-width": 1.5 }),
  );

  const forecastPath = view.forecast
    .map((p, i) => `${i === 0 ? "M" : "L"}${sx(p.t)},${sy(p.point)}`)
    .join(" ");
  svg.append(
    svgEl("path", {
      d: forecastPath,
      fill: "none",
      stroke: "#1e78dc",
      "stroke-width": 2,
      "stroke-dasharray": "5,3",
    }),
  );
  target.append(svg);
}

export function renderBanner(target: HTMLElement, message: string | null): void {
  target.replaceChildren();
  if (message) target.append(el("div", "banner", message));
}
