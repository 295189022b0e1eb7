import { describe, expect, it } from 'vitest';

import { renderChart } from '../src/chart.js';

const samples = [
  { n: 5, gain: 0.1 },
  { n: 15, gain: -0.05 },
  { n: 25, gain: 0.2 },
];

describe('renderChart', () => {
  it('renders one polyline per curve plus markers', () => {
    const svg = renderChart(
      [
        { label: 'a', samples, className: 'curve-current' },
        { label: 'b', samples, className: 'curve-pin-a' },
      ],
      [{ n: 10, gain: 0, label: 'n1', className: 'marker-crossing' }],
    );
    expect(svg.match(/<polyline/g)).toHaveLength(2);
    expect(svg).toContain('class="marker-crossing"');
    expect(svg).toContain('class="zero"');
  });

  it('labels the x axis in calendar ages', () => {
    const svg = renderChart([{ label: 'a', samples, className: 'c' }], []);
    // n in [5, 25] shows as ages in [75, 95]
    expect(svg).toContain('>80<');
    expect(svg).not.toContain('>10<');
  });

  it('marker tooltips carry both age and years-after-70', () => {
    const svg = renderChart([{ label: 'a', samples, className: 'c' }], [
      { n: 15, gain: 0, label: 'n1', className: 'm' },
    ]);
    expect(svg).toContain('age 85.0');
    expect(svg).toContain('(n=15.0)');
  });

  it('escapes labels', () => {
    const svg = renderChart([{ label: 'a<b>&"c"', samples, className: 'c' }], []);
    expect(svg).toContain('a&lt;b&gt;&amp;&quot;c&quot;');
  });

  it('handles empty input', () => {
    expect(renderChart([], [])).toContain('<svg');
  });
});
