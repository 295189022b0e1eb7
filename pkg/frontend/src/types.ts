// JSON shapes exchanged with the compute service. Field names match the
// service payloads exactly; the UI never derives these numbers itself.

export interface RateParams {
  p: number;
  q: number;
  r: number;
}

export interface CurrentScenario extends RateParams {
  K: number;
}

export interface CurveSample {
  n: number;
  gain: number;
}

export interface GainCurveResult {
  kind: 'gain_curve';
  variant: 'no_cola' | 'with_cola';
  K: number;
  p: number;
  q: number;
  r: number;
  n_lo: number;
  n_hi: number;
  step: number;
  samples: CurveSample[];
}

export interface BreakevenPointResult {
  kind: 'breakeven_point';
  K: number;
  p: number;
  q: number;
  n1: number;
}

export interface CriticalPointResult {
  kind: 'critical_point';
  K: number;
  p: number;
  q: number;
  n_star: number;
  r_star: number;
  residual: number;
}

export interface OptimizeResult {
  kind: 'optimize';
  mode: 'maximin' | 'at-age';
  p: number;
  q: number;
  r: number;
  n: number | null;
  K_opt: number;
  K_floor: number;
  K_ceil: number;
  n_eval: number;
  gain_at_opt: number;
  clamped: boolean;
}

export interface ComputeResponse<T> {
  result: T;
  inputs_echo: Record<string, unknown>;
  warnings: string[];
}

export interface ServiceErrorBody {
  error: {
    code: string;
    field?: string;
    message: string;
  };
}

/** Everything fetched for one parameter set; the single source of displayed numbers. */
export interface ScenarioData {
  curve: GainCurveResult;
  breakeven: BreakevenPointResult;
  critical: CriticalPointResult;
}

export interface PinnedScenario {
  id: number;
  label: string;
  scenario: CurrentScenario;
  data: ScenarioData;
}

export interface ScenarioState {
  current: CurrentScenario;
  pinned: PinnedScenario[];
}
