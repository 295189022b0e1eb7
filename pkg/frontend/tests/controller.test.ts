import { afterEach, beforeEach, describe, expect, it, vi } from 'vitest';

import { ApiClient } from '../src/api.js';
import {
  DEFAULT_OPTIONS,
  ExplorerController,
  type ExplorerView,
  type OptimizerPanel,
  type PinnedRow,
  type Readouts,
} from '../src/controller.js';

// ---------------------------------------------------------------------------
// fake service: distinctive per-parameter values so any client-side
// recomputation of a displayed number would be caught immediately

const fakeBreakeven = (K: number) => 10 + K + 0.11;
const fakeNStar = (K: number) => 30 + K + 0.007;
const fakeRStar = (K: number) => 0.04 + K / 1000;

function serviceBody(path: string, body: any): unknown {
  const wrap = (result: unknown, warnings: string[] = []) => ({
    result,
    inputs_echo: body,
    warnings,
  });
  if (path.endsWith('/v1/gain-curve')) {
    const samples = [];
    for (let n = body.n_lo; n <= body.n_hi; n += body.step) {
      samples.push({ n, gain: (n - 12) * (n - 40) / 500 + body.K / 100 });
    }
    return wrap({ kind: 'gain_curve', variant: 'with_cola', ...body, samples });
  }
  if (path.endsWith('/v1/breakeven')) {
    return wrap({ kind: 'breakeven_point', ...body, n1: fakeBreakeven(body.K) });
  }
  if (path.endsWith('/v1/critical')) {
    return wrap({
      kind: 'critical_point',
      ...body,
      n_star: fakeNStar(body.K),
      r_star: fakeRStar(body.K),
      residual: 0,
    });
  }
  if (path.endsWith('/v1/optimize')) {
    return wrap({
      kind: 'optimize',
      mode: body.mode,
      p: body.p,
      q: body.q,
      r: body.r,
      n: body.n ?? null,
      K_opt: body.r >= 0.06 ? 8.0 : 4.53,
      K_floor: 4,
      K_ceil: 5,
      n_eval: 26.61,
      gain_at_opt: 0.0504,
      clamped: body.r >= 0.06,
    });
  }
  throw new Error(`unexpected path ${path}`);
}

interface FetchGate {
  release: () => void;
}

function installFakeFetch(options: { gated?: boolean; fail?: boolean } = {}) {
  const calls: { path: string; body: any }[] = [];
  const gates: FetchGate[] = [];
  const impl = (url: string, init: RequestInit): Promise<Response> => {
    const body = JSON.parse(init.body as string);
    calls.push({ path: url, body });
    if (options.fail) {
      return Promise.reject(new TypeError('fetch failed'));
    }
    const respond = () =>
      new Response(JSON.stringify(serviceBody(url, body)), {
        status: 200,
        headers: { 'content-type': 'application/json' },
      });
    if (!options.gated) {
      return Promise.resolve(respond());
    }
    return new Promise((resolve) => {
      gates.push({ release: () => resolve(respond()) });
    });
  };
  vi.stubGlobal('fetch', impl);
  return { calls, gates };
}

// ---------------------------------------------------------------------------
// recording view

function recordingView() {
  const view = {
    chartSvg: '' as string,
    readouts: null as Readouts | null,
    pinnedRows: [] as PinnedRow[],
    pinEnabled: true,
    validationErrors: [] as string[],
    banner: null as string | null,
    warnings: [] as string[],
    optimizer: null as OptimizerPanel | null,
    inputs: null as unknown,
  };
  const impl: ExplorerView = {
    setChartSvg: (svg) => (view.chartSvg = svg),
    setReadouts: (r) => (view.readouts = r),
    setPinnedRows: (rows) => (view.pinnedRows = rows),
    setPinEnabled: (enabled) => (view.pinEnabled = enabled),
    setValidationErrors: (errors) => (view.validationErrors = errors),
    setBanner: (message) => (view.banner = message),
    setWarnings: (warnings) => (view.warnings = warnings),
    setOptimizer: (panel) => (view.optimizer = panel),
    setScenarioInputs: (scenario) => (view.inputs = scenario),
  };
  return { view, impl };
}

const makeController = (impl: ExplorerView) =>
  new ExplorerController(new ApiClient(''), impl, {
    ...DEFAULT_OPTIONS,
    curveWindow: { n_lo: 1, n_hi: 49, step: 1 },
  });

afterEach(() => {
  vi.unstubAllGlobals();
  vi.useRealTimers();
});

describe('readout parity with the service', () => {
  it('displays exactly the fetched values for three pinned scenarios', async () => {
    installFakeFetch();
    const { view, impl } = recordingView();
    const controller = makeController(impl);

    for (const K of [2, 5, 7]) {
      controller.setParam('K', K);
      await controller.refresh();
      controller.pinCurrent();
    }

    expect(view.pinnedRows).toHaveLength(3);
    for (const [index, K] of [2, 5, 7].entries()) {
      const row = view.pinnedRows[index]!;
      expect(row.breakeven).toBe(fakeBreakeven(K).toFixed(2));
      expect(row.nStar).toBe(fakeNStar(K).toFixed(2));
      expect(row.rStar).toBe(fakeRStar(K).toFixed(5));
    }
    // current readouts equal the last fetch verbatim as well
    expect(view.readouts!.breakeven).toBe(fakeBreakeven(7).toFixed(2));
    expect(view.readouts!.nStar).toBe(fakeNStar(7).toFixed(2));
    expect(view.readouts!.rStar).toBe(fakeRStar(7).toFixed(5));
    expect(controller.lastData!.critical.n_star).toBe(fakeNStar(7));
  });

  it('marks chart crossings from the fetched samples only', async () => {
    installFakeFetch();
    const { view, impl } = recordingView();
    const controller = makeController(impl);
    await controller.refresh();
    // fake curve dips negative between 12-ish and 40-ish: two crossings
    expect(view.readouts!.crossingAges).toHaveLength(2);
    expect(view.chartSvg).toContain('marker-crossing');
    expect(view.chartSvg).toContain('n*');
  });

  it('caps pinning at five scenarios', async () => {
    installFakeFetch();
    const { view, impl } = recordingView();
    const controller = makeController(impl);
    await controller.refresh();
    for (let i = 0; i < 7; i++) {
      controller.pinCurrent();
    }
    expect(view.pinnedRows).toHaveLength(5);
    expect(view.pinEnabled).toBe(false);
  });
});

describe('debounced edits', () => {
  beforeEach(() => {
    vi.useFakeTimers();
  });

  it('coalesces a burst of edits into one request batch after the interval', async () => {
    const { calls } = installFakeFetch();
    const { view, impl } = recordingView();
    const controller = makeController(impl);

    controller.setParam('K', 2);
    controller.setParam('K', 3);
    controller.setParam('r', 0.06);
    expect(calls).toHaveLength(0);

    await vi.advanceTimersByTimeAsync(DEFAULT_OPTIONS.debounceMs);
    await vi.runAllTimersAsync();

    // one gain-curve + one breakeven + one critical for the settled params
    expect(calls).toHaveLength(3);
    expect(calls.every((call) => call.body.K === 3)).toBe(true);
    expect(view.readouts!.breakeven).toBe(fakeBreakeven(3).toFixed(2));
  });

  it('resets the window on every edit', async () => {
    const { calls } = installFakeFetch();
    const { impl } = recordingView();
    const controller = makeController(impl);

    controller.setParam('K', 2);
    await vi.advanceTimersByTimeAsync(DEFAULT_OPTIONS.debounceMs - 50);
    controller.setParam('K', 4);
    await vi.advanceTimersByTimeAsync(DEFAULT_OPTIONS.debounceMs - 50);
    expect(calls).toHaveLength(0);
    await vi.advanceTimersByTimeAsync(50);
    await vi.runAllTimersAsync();
    expect(calls.every((call) => call.body.K === 4)).toBe(true);
  });
});

describe('stale responses', () => {
  it('ignores an older response that lands after a newer one', async () => {
    const { gates } = installFakeFetch({ gated: true });
    const { view, impl } = recordingView();
    const controller = makeController(impl);

    controller.setParam('K', 2);
    const first = controller.refresh();
    controller.setParam('K', 6);
    const second = controller.refresh();

    // release the second batch (requests 4-6), then the first (1-3)
    for (const gate of gates.slice(3)) gate.release();
    await second;
    for (const gate of gates.slice(0, 3)) gate.release();
    await first;

    expect(view.readouts!.breakeven).toBe(fakeBreakeven(6).toFixed(2));
    expect(controller.lastData!.breakeven.K).toBe(6);
  });
});

describe('failure handling', () => {
  it('shows the unreachable banner and recovers on retry', async () => {
    installFakeFetch({ fail: true });
    const { view, impl } = recordingView();
    const controller = makeController(impl);
    await controller.refresh();
    expect(view.banner).toMatch(/unreachable/);

    installFakeFetch();
    await controller.refresh();
    expect(view.banner).toBeNull();
    expect(view.readouts).not.toBeNull();
  });

  it('blocks invalid parameters before any request is sent', async () => {
    const { calls } = installFakeFetch();
    const { view, impl } = recordingView();
    const controller = makeController(impl);
    controller.setParam('K', 0);
    await controller.refresh();
    expect(view.validationErrors).toHaveLength(1);
    expect(calls).toHaveLength(0);
  });
});

describe('optimizer panel', () => {
  it('shows fetched optimum and writes it back on apply', async () => {
    installFakeFetch();
    const { view, impl } = recordingView();
    const controller = makeController(impl);
    controller.setOptimizerR(0.05);
    await vi.waitFor(() => expect(view.optimizer!.busy).toBe(false));
    expect(view.optimizer!.kOpt).toBe('4.53');
    expect(view.optimizer!.claimAge).toBe('65.47');
    expect(view.optimizer!.clamped).toBe(false);

    controller.applyOptimizer();
    expect(controller.state.current.K).toBe(4.53);
    expect((view.inputs as { K: number }).K).toBe(4.53);
  });

  it('flags a clamped optimum', async () => {
    installFakeFetch();
    const { view, impl } = recordingView();
    const controller = makeController(impl);
    controller.setOptimizerR(0.065);
    await vi.waitFor(() => expect(view.optimizer!.busy).toBe(false));
    expect(view.optimizer!.clamped).toBe(true);
    expect(view.optimizer!.kOpt).toBe('8.00');
  });

  it('disables maximin when r is at or below q', async () => {
    const { calls } = installFakeFetch();
    const { view, impl } = recordingView();
    const controller = makeController(impl);
    controller.setOptimizerR(0.02); // below the default q=0.025
    expect(view.optimizer!.maximinDisabled).toBe(true);
    expect(view.optimizer!.maximinDisabledReason).toMatch(/r > q/);
    expect(calls).toHaveLength(0);
  });
});
