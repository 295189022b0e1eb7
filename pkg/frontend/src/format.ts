// Shared display formatting: the one place fetched numbers become strings.

export const fmtYears = (x: number): string => x.toFixed(2);

export const fmtAge = (n: number): string => (70 + n).toFixed(1);

export const fmtClaimAge = (K: number): string => (70 - K).toFixed(2);

export const fmtRate = (x: number): string => x.toFixed(5);

export const fmtPercent = (x: number): string => `${(100 * x).toFixed(2)}%`;

export const fmtOffset = (K: number): string => K.toFixed(2);
