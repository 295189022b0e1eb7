// Chart-marker placement derived from fetched curve samples. This is
// presentation geometry (interpolating the plotted polyline), not model math.

import type { CurveSample } from './types.js';

/** n positions where the plotted polyline crosses zero, by linear interpolation. */
export function zeroCrossings(samples: CurveSample[]): number[] {
  const crossings: number[] = [];
  for (let i = 0; i + 1 < samples.length; i++) {
    const a = samples[i]!;
    const b = samples[i + 1]!;
    if (a.gain === 0) {
      crossings.push(a.n);
      continue;
    }
    if (a.gain * b.gain < 0) {
      const t = a.gain / (a.gain - b.gain);
      crossings.push(a.n + t * (b.n - a.n));
    }
  }
  const last = samples[samples.length - 1];
  if (last && last.gain === 0) {
    crossings.push(last.n);
  }
  return crossings;
}

/** The sample closest to a requested n (for the highlighted-age readout). */
export function nearestSample(samples: CurveSample[], n: number): CurveSample | null {
  let best: CurveSample | null = null;
  let bestDistance = Infinity;
  for (const sample of samples) {
    const distance = Math.abs(sample.n - n);
    if (distance < bestDistance) {
      best = sample;
      bestDistance = distance;
    }
  }
  return best;
}
