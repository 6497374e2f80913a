/**
 * Number rendering, kept byte-identical with the CLI's text output:
 * statistics at 4 decimals, p-values at 3 decimals with the "<0.001"
 * floor, degrees of freedom in %g style.
 */

export function formatStat(x: number): string {
  return x.toFixed(4);
}

export function formatP(p: number): string {
  if (p < 0.001) {
    return "<0.001";
  }
  return p.toFixed(3);
}

export function formatDf(df: number): string {
  // mirrors printf %g for the magnitudes that occur in ANOVA tables
  return String(Number(df.toPrecision(6)));
}

export function formatInt(n: number): string {
  return String(Math.round(n));
}
