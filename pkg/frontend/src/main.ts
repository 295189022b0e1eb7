// DOM bootstrap: binds the controller to the static elements in index.html.

import { ApiClient } from './api.js';
import { ExplorerController, type ExplorerView, type OptimizerPanel, type PinnedRow, type Readouts } from './controller.js';
import type { CurrentScenario } from './types.js';

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) {
    throw new Error(`missing element #${id}`);
  }
  return el as T;
};

function buildView(onUnpin: (id: number) => void): ExplorerView {
  const chart = $('chart');
  const banner = $('banner');
  const problems = $('problems');
  const warnings = $('warnings');
  const pinned = $('pinned');
  const pinButton = $<HTMLButtonElement>('pin');
  const readoutIds = [
    'ro-breakeven',
    'ro-breakeven-age',
    'ro-nstar',
    'ro-nstar-age',
    'ro-rstar',
    'ro-watch-age',
    'ro-watch-gain',
    'ro-crossings',
  ];

  return {
    setChartSvg: (svg) => {
      chart.innerHTML = svg;
    },
    setReadouts: (r: Readouts | null) => {
      const values = r
        ? [r.breakeven, r.breakevenAge, r.nStar, r.nStarAge, r.rStar, r.watchAge, r.watchGain,
           r.crossingAges.length ? r.crossingAges.join(', ') : 'none']
        : readoutIds.map(() => '—');
      readoutIds.forEach((id, i) => {
        $(id).textContent = values[i] ?? '—';
      });
    },
    setPinnedRows: (rows: PinnedRow[]) => {
      pinned.innerHTML = '';
      for (const row of rows) {
        const li = document.createElement('li');
        const text = document.createElement('span');
        text.textContent = `${row.label} — break-even ${row.breakeven}y, n* ${row.nStar}y, r* ${row.rStar}`;
        const button = document.createElement('button');
        button.textContent = 'unpin';
        button.addEventListener('click', () => onUnpin(row.id));
        li.append(text, button);
        pinned.append(li);
      }
    },
    setPinEnabled: (enabled) => {
      pinButton.disabled = !enabled;
    },
    setValidationErrors: (errors) => {
      problems.textContent = errors.join(' · ');
      problems.hidden = errors.length === 0;
    },
    setBanner: (message) => {
      banner.textContent = message ?? '';
      banner.hidden = message === null;
    },
    setWarnings: (list) => {
      warnings.textContent = list.join(' · ');
      warnings.hidden = list.length === 0;
    },
    setOptimizer: (panel: OptimizerPanel) => {
      $('opt-kopt').textContent = panel.kOpt;
      $('opt-age').textContent = panel.claimAge;
      $('opt-gain').textContent = panel.gain;
      $('opt-min-age').textContent = panel.minGainAge;
      $('opt-clamped').hidden = !panel.clamped;
      const disabledNote = $('opt-disabled');
      disabledNote.textContent = panel.maximinDisabledReason ?? '';
      disabledNote.hidden = !panel.maximinDisabled;
      $('opt-results').hidden = panel.maximinDisabled;
    },
    setScenarioInputs: (s: CurrentScenario) => {
      $<HTMLInputElement>('in-K').value = String(s.K);
      $<HTMLInputElement>('in-p').value = String(s.p);
      $<HTMLInputElement>('in-q').value = String(s.q);
      $<HTMLInputElement>('in-r').value = String(s.r);
    },
  };
}

function bind(): void {
  const api = new ApiClient('');
  const controller = new ExplorerController(api, buildView((id) => controller.unpin(id)));

  const numberInput = (id: string, handler: (value: number) => void): void => {
    const input = $<HTMLInputElement>(id);
    input.addEventListener('input', () => {
      const value = Number(input.value);
      if (!Number.isNaN(value)) {
        handler(value);
      }
    });
  };

  numberInput('in-K', (v) => controller.setParam('K', v));
  numberInput('in-p', (v) => controller.setParam('p', v));
  numberInput('in-q', (v) => controller.setParam('q', v));
  numberInput('in-r', (v) => controller.setParam('r', v));
  numberInput('in-watch-age', (v) => controller.setWatchAge(v));
  $('pin').addEventListener('click', () => controller.pinCurrent());
  $('retry').addEventListener('click', () => void controller.refresh());

  numberInput('opt-r', (v) => {
    $('opt-r-value').textContent = v.toFixed(4);
    controller.setOptimizerR(v);
  });
  numberInput('opt-target-age', (v) => controller.setOptimizerTargetAge(v));
  $<HTMLSelectElement>('opt-mode').addEventListener('change', (event) => {
    const mode = (event.target as HTMLSelectElement).value as 'maximin' | 'at-age';
    $('opt-target-wrap').hidden = mode !== 'at-age';
    controller.setOptimizerMode(mode);
  });
  $('opt-apply').addEventListener('click', () => controller.applyOptimizer());

  void controller.start();
}

document.addEventListener('DOMContentLoaded', bind);
