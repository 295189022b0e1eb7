// Explorer/optimizer logic, independent of the DOM. A View implementation
// receives ready-to-display strings; every number in them originates from
// service JSON (see ScenarioData), never from local computation.

import { ApiClient, ServiceUnreachableError } from './api.js';
import { renderChart, type ChartCurve, type ChartMarker } from './chart.js';
import { fmtAge, fmtClaimAge, fmtOffset, fmtPercent, fmtRate, fmtYears } from './format.js';
import { nearestSample, zeroCrossings } from './markers.js';
import {
  canPin,
  initialState,
  pinScenario,
  unpinScenario,
  validateScenario,
  withParam,
} from './state.js';
import type {
  CurrentScenario,
  OptimizeResult,
  PinnedScenario,
  ScenarioData,
  ScenarioState,
} from './types.js';

export interface Readouts {
  /** break-even years after 70 and the same as a calendar age */
  breakeven: string;
  breakevenAge: string;
  /** minimum-gain location and the critical market rate */
  nStar: string;
  nStarAge: string;
  rStar: string;
  /** gain at the user-chosen watch age */
  watchAge: string;
  watchGain: string;
  /** chart-polyline zero crossings, as calendar ages */
  crossingAges: string[];
}

export interface PinnedRow {
  id: number;
  label: string;
  breakeven: string;
  nStar: string;
  rStar: string;
}

export interface OptimizerPanel {
  mode: 'maximin' | 'at-age';
  maximinDisabled: boolean;
  maximinDisabledReason: string | null;
  kOpt: string;
  claimAge: string;
  gain: string;
  minGainAge: string;
  clamped: boolean;
  busy: boolean;
}

export interface ExplorerView {
  setChartSvg(svg: string): void;
  setReadouts(readouts: Readouts | null): void;
  setPinnedRows(rows: PinnedRow[]): void;
  setPinEnabled(enabled: boolean): void;
  setValidationErrors(errors: string[]): void;
  setBanner(message: string | null): void;
  setWarnings(warnings: string[]): void;
  setOptimizer(panel: OptimizerPanel): void;
  setScenarioInputs(scenario: CurrentScenario): void;
}

export interface ControllerOptions {
  debounceMs: number;
  curveWindow: { n_lo: number; n_hi: number; step: number };
}

export const DEFAULT_OPTIONS: ControllerOptions = {
  debounceMs: 250,
  curveWindow: { n_lo: 0.5, n_hi: 50, step: 0.5 },
};

const CURVE_CLASSES = ['curve-pin-a', 'curve-pin-b', 'curve-pin-c', 'curve-pin-d', 'curve-pin-e'];

export class ExplorerController {
  state: ScenarioState = initialState();
  /** raw service values behind the current readouts (parity hook for tests) */
  lastData: ScenarioData | null = null;
  lastOptimize: OptimizeResult | null = null;

  private watchAgeYears = 15;
  private optimizerMode: 'maximin' | 'at-age' = 'maximin';
  private optimizerR = 0.05;
  private optimizerTargetN = 15;
  private debounceHandle: ReturnType<typeof setTimeout> | null = null;
  private inflight: AbortController | null = null;
  private requestSeq = 0;
  private optimizerSeq = 0;

  constructor(
    private readonly api: ApiClient,
    private readonly view: ExplorerView,
    private readonly options: ControllerOptions = DEFAULT_OPTIONS,
  ) {}

  /** Initial render: push defaults into the view and fetch once. */
  async start(): Promise<void> {
    this.view.setScenarioInputs(this.state.current);
    await Promise.all([this.refresh(), this.refreshOptimizer()]);
  }

  setParam(name: keyof CurrentScenario, value: number): void {
    this.state = withParam(this.state, name, value);
    this.scheduleRefresh();
  }

  setWatchAge(age: number): void {
    this.watchAgeYears = age - 70;
    if (this.lastData) {
      this.render(this.lastData);
    }
  }

  pinCurrent(): void {
    if (this.lastData && canPin(this.state)) {
      this.state = pinScenario(this.state, this.lastData);
      this.render(this.lastData);
    }
  }

  unpin(id: number): void {
    this.state = unpinScenario(this.state, id);
    if (this.lastData) {
      this.render(this.lastData);
    }
  }

  setOptimizerMode(mode: 'maximin' | 'at-age'): void {
    this.optimizerMode = mode;
    void this.refreshOptimizer();
  }

  setOptimizerR(r: number): void {
    this.optimizerR = r;
    void this.refreshOptimizer();
  }

  setOptimizerTargetAge(age: number): void {
    this.optimizerTargetN = age - 70;
    if (this.optimizerMode === 'at-age') {
      void this.refreshOptimizer();
    }
  }

  /** Write the last optimizer suggestion back into the explorer scenario. */
  applyOptimizer(): void {
    if (!this.lastOptimize) {
      return;
    }
    this.state = withParam(this.state, 'K', this.lastOptimize.K_opt);
    this.state = withParam(this.state, 'r', this.lastOptimize.r);
    this.view.setScenarioInputs(this.state.current);
    this.scheduleRefresh();
  }

  /** Debounced parameter-edit path; the displayed curve settles to the last edit. */
  private scheduleRefresh(): void {
    if (this.debounceHandle !== null) {
      clearTimeout(this.debounceHandle);
    }
    this.debounceHandle = setTimeout(() => {
      this.debounceHandle = null;
      void this.refresh();
    }, this.options.debounceMs);
  }

  async refresh(): Promise<void> {
    const problems = validateScenario(this.state.current);
    this.view.setValidationErrors(problems);
    if (problems.length > 0) {
      return;
    }
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;
    const seq = ++this.requestSeq;
    try {
      const { data, warnings } = await this.api.scenarioData(
        this.state.current,
        this.options.curveWindow,
        controller.signal,
      );
      if (seq !== this.requestSeq) {
        return; // a newer request already rendered
      }
      this.lastData = data;
      this.view.setBanner(null);
      this.view.setWarnings(warnings);
      this.render(data);
    } catch (err) {
      if (err instanceof DOMException && err.name === 'AbortError') {
        return;
      }
      if (seq !== this.requestSeq) {
        return;
      }
      if (err instanceof ServiceUnreachableError) {
        this.view.setBanner('Compute service unreachable — check the server and retry.');
      } else {
        this.view.setBanner(`Request failed: ${(err as Error).message}`);
      }
    }
  }

  async refreshOptimizer(): Promise<void> {
    const { p, q } = this.state.current;
    const r = this.optimizerR;
    if (r <= q) {
      this.view.setOptimizer({
        mode: this.optimizerMode,
        maximinDisabled: true,
        maximinDisabledReason:
          'Needs r > q: optimization is undefined when the market return does not beat the COLA.',
        kOpt: '—',
        claimAge: '—',
        gain: '—',
        minGainAge: '—',
        clamped: false,
        busy: false,
      });
      return;
    }
    const seq = ++this.optimizerSeq;
    this.view.setOptimizer(this.optimizerPanel(null, true));
    try {
      const body =
        this.optimizerMode === 'at-age'
          ? { mode: this.optimizerMode, n: this.optimizerTargetN, p, q, r }
          : { mode: this.optimizerMode, p, q, r };
      const response = await this.api.optimize(body);
      if (seq !== this.optimizerSeq) {
        return;
      }
      this.lastOptimize = response.result;
      this.view.setOptimizer(this.optimizerPanel(response.result, false));
    } catch (err) {
      if (seq !== this.optimizerSeq) {
        return;
      }
      this.view.setBanner(
        err instanceof ServiceUnreachableError
          ? 'Compute service unreachable — check the server and retry.'
          : `Optimizer request failed: ${(err as Error).message}`,
      );
    }
  }

  private optimizerPanel(result: OptimizeResult | null, busy: boolean): OptimizerPanel {
    return {
      mode: this.optimizerMode,
      maximinDisabled: false,
      maximinDisabledReason: null,
      kOpt: result ? fmtOffset(result.K_opt) : '…',
      claimAge: result ? fmtClaimAge(result.K_opt) : '…',
      gain: result ? fmtPercent(result.gain_at_opt) : '…',
      minGainAge: result ? fmtAge(result.n_eval) : '…',
      clamped: result ? result.clamped : false,
      busy,
    };
  }

  /** Rebuild chart + readouts from fetched data (and pinned fetched data). */
  private render(data: ScenarioData): void {
    const curves: ChartCurve[] = [
      { label: this.describe(this.state.current), samples: data.curve.samples, className: 'curve-current' },
    ];
    this.state.pinned.forEach((pin, index) => {
      curves.push({
        label: pin.label,
        samples: pin.data.curve.samples,
        className: CURVE_CLASSES[index % CURVE_CLASSES.length]!,
      });
    });

    const markers: ChartMarker[] = [];
    const crossings = zeroCrossings(data.curve.samples);
    crossings.forEach((n, index) => {
      markers.push({ n, gain: 0, label: index === 0 ? 'n1' : 'n2', className: 'marker-crossing' });
    });
    const nStar = data.critical.n_star;
    const starSample = nearestSample(data.curve.samples, nStar);
    if (starSample) {
      markers.push({ n: nStar, gain: starSample.gain, label: 'n*', className: 'marker-minimum' });
    }
    const watch = nearestSample(data.curve.samples, this.watchAgeYears);
    if (watch) {
      markers.push({ n: watch.n, gain: watch.gain, label: 'watch', className: 'marker-watch' });
    }

    this.view.setChartSvg(renderChart(curves, markers));
    this.view.setReadouts({
      breakeven: fmtYears(data.breakeven.n1),
      breakevenAge: fmtAge(data.breakeven.n1),
      nStar: fmtYears(data.critical.n_star),
      nStarAge: fmtAge(data.critical.n_star),
      rStar: fmtRate(data.critical.r_star),
      watchAge: watch ? fmtAge(watch.n) : '—',
      watchGain: watch ? fmtPercent(watch.gain) : '—',
      crossingAges: crossings.map((n) => fmtAge(n)),
    });
    this.view.setPinnedRows(
      this.state.pinned.map((pin: PinnedScenario) => ({
        id: pin.id,
        label: pin.label,
        breakeven: fmtYears(pin.data.breakeven.n1),
        nStar: fmtYears(pin.data.critical.n_star),
        rStar: fmtRate(pin.data.critical.r_star),
      })),
    );
    this.view.setPinEnabled(canPin(this.state));
  }

  private describe(s: CurrentScenario): string {
    return `current: claim ${70 - s.K} (K=${s.K}, p=${s.p}, q=${s.q}, r=${s.r})`;
  }
}
