import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import type { ApiClient, ModelMetrics } from "../api.js";
import { ThresholdController } from "../state.js";

function metricsFor(threshold: number): ModelMetrics {
  return { threshold } as ModelMetrics;
}

interface Deferred {
  threshold: number;
  resolve: (m: ModelMetrics) => void;
  reject: (e: unknown) => void;
}

function makeFakeApi() {
  const pending: Deferred[] = [];
  const api = {
    metrics(_id: string, threshold: number) {
      return new Promise<ModelMetrics>((resolve, reject) => {
        pending.push({ threshold, resolve, reject });
      });
    },
  } as unknown as ApiClient;
  return { api, pending };
}

describe("ThresholdController", () => {
  beforeEach(() => vi.useFakeTimers());
  afterEach(() => vi.useRealTimers());

  it("debounces a burst of slider moves into one request", async () => {
    const { api, pending } = makeFakeApi();
    const applied: number[] = [];
    const controller = new ThresholdController(
      api, (m) => applied.push(m.threshold), () => {}, 150,
    );
    controller.set("m", 0.1);
    controller.set("m", 0.2);
    controller.set("m", 0.3);
    expect(controller.hasPending()).toBe(true);
    await vi.advanceTimersByTimeAsync(200);
    expect(pending).toHaveLength(1);
    expect(pending[0].threshold).toBe(0.3);
    pending[0].resolve(metricsFor(0.3));
    await vi.advanceTimersByTimeAsync(0);
    expect(applied).toEqual([0.3]);
  });

  it("drops a stale response that resolves after a newer one", async () => {
    const { api, pending } = makeFakeApi();
    const applied: number[] = [];
    const controller = new ThresholdController(
      api, (m) => applied.push(m.threshold), () => {}, 0,
    );
    void controller.fire("m", 0.2);
    void controller.fire("m", 0.9);
    expect(pending).toHaveLength(2);
    pending[1].resolve(metricsFor(0.9)); // newer resolves first
    await vi.advanceTimersByTimeAsync(0);
    pending[0].resolve(metricsFor(0.2)); // stale arrives late
    await vi.advanceTimersByTimeAsync(0);
    expect(applied).toEqual([0.9]); // last slider value wins
  });

  it("reports an error only when nothing newer already rendered", async () => {
    const { api, pending } = makeFakeApi();
    const errors: unknown[] = [];
    const controller = new ThresholdController(
      api, () => {}, (e) => errors.push(e), 0,
    );
    void controller.fire("m", 0.4);
    pending[0].reject(new Error("network down"));
    await vi.advanceTimersByTimeAsync(0);
    expect(errors).toHaveLength(1);
  });

  it("clamps threshold values before querying", async () => {
    const { api, pending } = makeFakeApi();
    const controller = new ThresholdController(api, () => {}, () => {}, 10);
    controller.set("m", 1.8);
    await vi.advanceTimersByTimeAsync(20);
    expect(pending[0].threshold).toBe(1);
  });
});
