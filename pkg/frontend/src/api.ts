// Thin fetch wrapper around the compute service endpoints.

import type {
  BreakevenPointResult,
  ComputeResponse,
  CriticalPointResult,
  CurrentScenario,
  GainCurveResult,
  OptimizeResult,
  ScenarioData,
  ServiceErrorBody,
} from './types.js';

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

export class ServiceUnreachableError extends Error {}

async function postJson<T>(
  baseUrl: string,
  path: string,
  body: unknown,
  signal?: AbortSignal,
): Promise<ComputeResponse<T>> {
  let response: Response;
  try {
    response = await fetch(`${baseUrl}${path}`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(body),
      signal,
    });
  } catch (err) {
    if (err instanceof DOMException && err.name === 'AbortError') {
      throw err;
    }
    throw new ServiceUnreachableError(`service unreachable: ${String(err)}`);
  }
  if (!response.ok) {
    let code = 'http';
    let message = `${response.status}`;
    try {
      const parsed = (await response.json()) as ServiceErrorBody;
      code = parsed.error.code;
      message = parsed.error.message;
    } catch {
      // non-JSON error body: keep the status text
    }
    throw new ApiError(response.status, code, message);
  }
  return (await response.json()) as ComputeResponse<T>;
}

export interface CurveWindow {
  n_lo: number;
  n_hi: number;
  step: number;
}

export class ApiClient {
  constructor(readonly baseUrl: string = '') {}

  gainCurve(
    scenario: CurrentScenario,
    window: CurveWindow,
    signal?: AbortSignal,
  ): Promise<ComputeResponse<GainCurveResult>> {
    return postJson(this.baseUrl, '/v1/gain-curve', { ...scenario, ...window }, signal);
  }

  breakeven(
    scenario: CurrentScenario,
    signal?: AbortSignal,
  ): Promise<ComputeResponse<BreakevenPointResult>> {
    const { K, p, q } = scenario;
    return postJson(this.baseUrl, '/v1/breakeven', { K, p, q }, signal);
  }

  critical(
    scenario: CurrentScenario,
    signal?: AbortSignal,
  ): Promise<ComputeResponse<CriticalPointResult>> {
    const { K, p, q } = scenario;
    return postJson(this.baseUrl, '/v1/critical', { K, p, q }, signal);
  }

  optimize(
    body: { mode: 'maximin' | 'at-age'; n?: number; p: number; q: number; r: number },
    signal?: AbortSignal,
  ): Promise<ComputeResponse<OptimizeResult>> {
    return postJson(this.baseUrl, '/v1/optimize', body, signal);
  }

  /** Everything the explorer needs for one parameter set, fetched together. */
  async scenarioData(
    scenario: CurrentScenario,
    window: CurveWindow,
    signal?: AbortSignal,
  ): Promise<{ data: ScenarioData; warnings: string[] }> {
    const [curve, breakeven, critical] = await Promise.all([
      this.gainCurve(scenario, window, signal),
      this.breakeven(scenario, signal),
      this.critical(scenario, signal),
    ]);
    return {
      data: { curve: curve.result, breakeven: breakeven.result, critical: critical.result },
      warnings: [...curve.warnings, ...breakeven.warnings, ...critical.warnings],
    };
  }
}
