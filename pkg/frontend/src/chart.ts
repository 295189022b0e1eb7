// Hand-rolled SVG line chart for gain curves. Pure functions: curves and
// marker positions in, an SVG string out.

import type { CurveSample } from './types.js';

export interface ChartCurve {
  label: string;
  samples: CurveSample[];
  className: string;
}

export interface ChartMarker {
  n: number;
  gain: number;
  label: string;
  className: string;
}

export interface ChartOptions {
  width: number;
  height: number;
  margin: number;
}

export const DEFAULT_CHART: ChartOptions = { width: 720, height: 360, margin: 44 };

interface Scale {
  (value: number): number;
}

function makeScale(d0: number, d1: number, r0: number, r1: number): Scale {
  const span = d1 - d0 || 1;
  return (value) => r0 + ((value - d0) / span) * (r1 - r0);
}

function ticks(lo: number, hi: number, count: number): number[] {
  const raw = (hi - lo) / Math.max(count, 1);
  const power = Math.pow(10, Math.floor(Math.log10(raw)));
  const step = [1, 2, 5, 10].map((m) => m * power).find((s) => (hi - lo) / s <= count) ?? raw;
  const first = Math.ceil(lo / step) * step;
  const out: number[] = [];
  for (let v = first; v <= hi + 1e-9; v += step) {
    out.push(Number(v.toFixed(10)));
  }
  return out;
}

const esc = (text: string): string =>
  text.replaceAll('&', '&amp;').replaceAll('<', '&lt;').replaceAll('>', '&gt;').replaceAll('"', '&quot;');

/** Render curves (x axis: calendar age 70+n) plus zero line and markers. */
export function renderChart(
  curves: ChartCurve[],
  markers: ChartMarker[],
  opts: ChartOptions = DEFAULT_CHART,
): string {
  const all = curves.flatMap((curve) => curve.samples);
  if (all.length === 0) {
    return `<svg xmlns="http://www.w3.org/2000/svg" width="${opts.width}" height="${opts.height}"></svg>`;
  }
  const nLo = Math.min(...all.map((s) => s.n));
  const nHi = Math.max(...all.map((s) => s.n));
  let gLo = Math.min(0, ...all.map((s) => s.gain));
  let gHi = Math.max(0, ...all.map((s) => s.gain));
  const pad = 0.05 * (gHi - gLo || 1);
  gLo -= pad;
  gHi += pad;

  const x = makeScale(nLo, nHi, opts.margin, opts.width - opts.margin);
  const y = makeScale(gLo, gHi, opts.height - opts.margin, opts.margin);

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${opts.width} ${opts.height}" width="${opts.width}" height="${opts.height}" role="img">`,
  );

  // axes and grid
  for (const tick of ticks(nLo, nHi, 8)) {
    const px = x(tick).toFixed(1);
    parts.push(`<line class="grid" x1="${px}" y1="${opts.margin}" x2="${px}" y2="${opts.height - opts.margin}"/>`);
    parts.push(
      `<text class="tick" x="${px}" y="${opts.height - opts.margin + 16}" text-anchor="middle">${(70 + tick).toFixed(0)}</text>`,
    );
  }
  for (const tick of ticks(gLo, gHi, 6)) {
    const py = y(tick).toFixed(1);
    parts.push(`<line class="grid" x1="${opts.margin}" y1="${py}" x2="${opts.width - opts.margin}" y2="${py}"/>`);
    parts.push(
      `<text class="tick" x="${opts.margin - 6}" y="${py}" text-anchor="end" dominant-baseline="middle">${(100 * tick).toFixed(0)}%</text>`,
    );
  }
  parts.push(
    `<text class="axis-label" x="${opts.width / 2}" y="${opts.height - 6}" text-anchor="middle">age</text>`,
  );

  // zero-gain line
  const zeroY = y(0).toFixed(1);
  parts.push(
    `<line class="zero" x1="${opts.margin}" y1="${zeroY}" x2="${opts.width - opts.margin}" y2="${zeroY}"/>`,
  );

  for (const curve of curves) {
    const points = curve.samples.map((s) => `${x(s.n).toFixed(1)},${y(s.gain).toFixed(1)}`).join(' ');
    parts.push(`<polyline class="${esc(curve.className)}" fill="none" points="${points}">` +
      `<title>${esc(curve.label)}</title></polyline>`);
  }

  for (const marker of markers) {
    const px = x(marker.n).toFixed(1);
    const py = y(marker.gain).toFixed(1);
    const title = `${marker.label} — age ${(70 + marker.n).toFixed(1)} (n=${marker.n.toFixed(1)})`;
    parts.push(
      `<g class="${esc(marker.className)}"><circle cx="${px}" cy="${py}" r="4"/>` +
        `<text x="${px}" y="${Number(py) - 8}" text-anchor="middle">${esc(marker.label)}</text>` +
        `<title>${esc(title)}</title></g>`,
    );
  }

  parts.push('</svg>');
  return parts.join('');
}
