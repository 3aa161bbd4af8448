/**
 * Live contract test against the real service: spawns the Python API on a
 * synthetic dataset, trains all five model kinds, then checks that
 *  - the threshold slider path renders confusion matrices identical to
 *    direct API responses at t in {0, 0.25, 0.5, 0.75, 1}, and
 *  - the comparison chart highlights exactly the argmax-accuracy models,
 *    ties included.
 * Skipped when python3 is not available.
 */

import { spawn, spawnSync, type ChildProcess } from "node:child_process";
import { mkdtempSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { join, resolve } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient, type ModelMetrics } from "../api.js";
import { ThresholdController } from "../state.js";
import { buildComparison, buildMetricsPanel } from "../viewmodels.js";

const REPO_ROOT = resolve(__dirname, "../../..");
const PORT = 8000 + Math.floor(Math.random() * 20000);
const BASE = `http://127.0.0.1:${PORT}`;

const pythonAvailable =
  spawnSync("python3", ["-c", "import citykpi, uvicorn"], { timeout: 20000 }).status === 0;

let server: ChildProcess | null = null;
let workDir: string;
const api = new ApiClient(BASE);

async function waitForServer(timeoutMs = 30000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  for (;;) {
    try {
      await api.summary();
      return;
    } catch {
      if (Date.now() > deadline) throw new Error("service did not come up");
      await new Promise((r) => setTimeout(r, 250));
    }
  }
}

describe.skipIf(!pythonAvailable)("dashboard against the live service", () => {
  beforeAll(async () => {
    workDir = mkdtempSync(join(tmpdir(), "citykpi-ui-"));
    const dataset = join(workDir, "demo.json");
    const generated = spawnSync(
      "python3",
      [
        join(REPO_ROOT, "scripts", "make_demo_dataset.py"),
        "--out-csv", join(workDir, "demo.csv"),
        "--out-json", dataset,
      ],
      { timeout: 60000 },
    );
    expect(generated.status).toBe(0);

    server = spawn(
      "python3",
      [
        "-m", "citykpi.cli", "serve",
        "--dataset", dataset,
        "--models-dir", join(workDir, "models"),
        "--port", String(PORT),
      ],
      { stdio: "ignore" },
    );
    await waitForServer();

    for (const kind of ["logreg", "svm", "tree", "bnb", "ann"]) {
      const job = await api.train({ model_kind: kind, seed: 0, test_fraction: 0.3 });
      const done = await api.waitForJob(job.id);
      expect(done.status).toBe("done");
    }
  }, 120000);

  afterAll(() => {
    server?.kill();
    if (workDir) rmSync(workDir, { recursive: true, force: true });
  });

  it("threshold slider renders matrices identical to direct API responses", async () => {
    const models = await api.models();
    const modelId = models[0].id;

    let rendered: ModelMetrics | null = null;
    const controller = new ThresholdController(
      api,
      (m) => {
        rendered = m;
      },
      (e) => {
        throw e;
      },
      0,
    );

    for (const t of [0, 0.25, 0.5, 0.75, 1]) {
      rendered = null;
      await controller.fire(modelId, t);
      expect(rendered).not.toBeNull();
      const view = buildMetricsPanel(rendered!);

      const direct = (await fetch(
        `${BASE}/api/models/${modelId}/metrics?threshold=${t}`,
      ).then((r) => r.json())) as ModelMetrics;

      const directCounts = direct.confusion.counts.flat();
      expect(view.cells.map((c) => c.count)).toEqual(directCounts);
      expect(view.accuracy).toBe(direct.report.accuracy);
      expect(view.auc).toBe(direct.auc);
      expect(view.rows[1].recall).toBe(direct.report.classes["1"].recall);
    }
  }, 30000);

  it("threshold 0 yields full class-1 recall; AUC never moves", async () => {
    const models = await api.models();
    const modelId = models[0].id;
    const at0 = await api.metrics(modelId, 0);
    expect(at0.report.classes["1"].recall).toBe(1.0);
    const at07 = await api.metrics(modelId, 0.7);
    expect(at07.auc).toBe(at0.auc);
  });

  it("comparison chart highlights exactly the argmax models, ties included", async () => {
    const models = await api.models();
    expect(models).toHaveLength(5);
    const view = buildComparison(models);

    const best = Math.max(...models.map((m) => m.accuracy));
    const expected = models
      .filter((m) => m.accuracy === best)
      .map((m) => m.id)
      .sort();
    expect([...view.bestIds].sort()).toEqual(expected);
    for (const bar of view.bars) {
      expect(bar.highlighted).toBe(bar.accuracy === best);
    }
    // The demo dataset at seed 0 produces a two-way accuracy tie, so the
    // ties-included path is genuinely exercised.
    expect(expected.length).toBeGreaterThanOrEqual(2);
  });

  it("forecast endpoint feeds the chart with widening bounds", async () => {
    const result = await api.forecast("UNEMPLOYMENT_RATE", 6, 0.95, true);
    expect(result.series).toBeDefined();
    expect(result.series!.length).toBeGreaterThan(100);
    const widths = result.steps.map((s) => s.upper - s.lower);
    const sorted = [...widths].sort((a, b) => a - b);
    expect(widths).toEqual(sorted);
  });
});
