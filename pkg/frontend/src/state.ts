// Scenario state and parameter validation. Pure data handling only: all
// model numbers come from the service.

import type { CurrentScenario, PinnedScenario, ScenarioData, ScenarioState } from './types.js';

export const MAX_PINNED = 5;

export const DEFAULT_SCENARIO: CurrentScenario = { K: 1, p: 0.08, q: 0.025, r: 0.05 };

export function initialState(): ScenarioState {
  return { current: { ...DEFAULT_SCENARIO }, pinned: [] };
}

/** Human-readable problems with a parameter set; empty when it may be sent. */
export function validateScenario(s: CurrentScenario): string[] {
  const problems: string[] = [];
  if (!Number.isFinite(s.K) || s.K <= 0 || s.K > 8) {
    problems.push('K must be in (0, 8] years before age 70');
  }
  if (!Number.isFinite(s.p) || s.p <= 0 || s.p >= 1) {
    problems.push('p must be a yearly fraction in (0, 1)');
  }
  if (!Number.isFinite(s.q) || s.q < 0 || s.q >= 1) {
    problems.push('q must be a yearly fraction in [0, 1)');
  }
  if (!Number.isFinite(s.r) || s.r < 0 || s.r >= 1) {
    problems.push('r must be a yearly fraction in [0, 1)');
  }
  return problems;
}

export function withParam(
  state: ScenarioState,
  name: keyof CurrentScenario,
  value: number,
): ScenarioState {
  return { ...state, current: { ...state.current, [name]: value } };
}

export function canPin(state: ScenarioState): boolean {
  return state.pinned.length < MAX_PINNED;
}

let nextPinId = 1;

export function pinScenario(state: ScenarioState, data: ScenarioData): ScenarioState {
  if (!canPin(state)) {
    return state;
  }
  const s = state.current;
  const pin: PinnedScenario = {
    id: nextPinId++,
    label: `claim ${70 - s.K} (K=${s.K}, r=${s.r})`,
    scenario: { ...s },
    data,
  };
  return { ...state, pinned: [...state.pinned, pin] };
}

export function unpinScenario(state: ScenarioState, id: number): ScenarioState {
  return { ...state, pinned: state.pinned.filter((pin) => pin.id !== id) };
}
