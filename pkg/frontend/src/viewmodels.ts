/**
 * Pure payload-to-strings mappers for the three panels. Every string is a
 * formatting of a number taken verbatim from an API response; nothing here
 * computes a statistic. Keeping these pure makes display parity with the
 * CLI testable without a DOM.
 */

import type {
  AnovaReport,
  AnovaRowDto,
  CurvePointDto,
  MdeReport,
  NsizeReport,
  PowerReport,
} from "./api";
import { formatDf, formatInt, formatP, formatStat } from "./format";

export interface PowerPanelView {
  nTotal: string;
  nPerGroup: string;
  achievedPower: string;
  lambda: string;
  dfPair: string;
  critF: string;
  powerAtN: string;
  unconstrainedNote: string | null;
}

export function powerPanelView(
  nsize: NsizeReport,
  power: PowerReport,
): PowerPanelView {
  return {
    nTotal: formatInt(nsize.n_total),
    nPerGroup: formatInt(nsize.n_per_group),
    achievedPower: formatStat(nsize.achieved_power),
    lambda: formatStat(nsize.lambda),
    dfPair: `(${formatDf(nsize.df1)}, ${formatDf(nsize.df2)})`,
    critF: formatStat(nsize.crit_f),
    powerAtN: formatStat(power.power),
    unconstrainedNote:
      nsize.n_unconstrained !== nsize.n_total
        ? `without the equal-allocation step: N = ${formatInt(nsize.n_unconstrained)} ` +
          `(power ${formatStat(nsize.power_unconstrained)})`
        : null,
  };
}

export interface MdeView {
  f: string;
  powerAtF: string;
}

export function mdeView(report: MdeReport): MdeView {
  return { f: formatStat(report.f), powerAtF: formatStat(report.power_at_f) };
}

export type AdjustMode = "none" | "gg" | "hf";

export interface AnovaRowView {
  source: string;
  ss: string;
  df: string;
  ms: string;
  f: string;
  p: string;
}

export interface AnovaView {
  rows: AnovaRowView[];
  sphericity: string | null;
  epsilons: string | null;
  adjustNote: string | null;
}

function rowP(
  row: AnovaRowDto,
  report: AnovaReport,
  mode: AdjustMode,
): number | null {
  if (mode !== "none" && report.adjusted && row.source in report.adjusted[mode]) {
    return report.adjusted[mode][row.source];
  }
  return row.p;
}

export function anovaView(report: AnovaReport, mode: AdjustMode = "none"): AnovaView {
  const rows = report.rows.map((row) => {
    const p = rowP(row, report, mode);
    return {
      source: row.source,
      ss: formatStat(row.ss),
      df: formatDf(row.df),
      ms: formatStat(row.ms),
      f: row.f === null ? "" : formatStat(row.f),
      p: p === null ? "" : formatP(p),
    };
  });
  const sph = report.sphericity;
  let sphericity: string | null = null;
  let epsilons: string | null = null;
  if (sph) {
    sphericity =
      `Mauchly W = ${formatStat(sph.mauchly_w)}, chi2 = ${formatStat(sph.chisq)}, ` +
      `df = ${formatInt(sph.df)}, p = ${formatP(sph.p)}`;
    epsilons =
      `GG = ${formatStat(sph.eps_gg)}, HF = ${formatStat(sph.eps_hf)} ` +
      `(lower bound ${formatDf(sph.eps_lower_bound)})`;
  }
  let adjustNote: string | null = null;
  if (mode !== "none" && sph) {
    const eps = mode === "gg" ? sph.eps_gg : sph.eps_hf;
    adjustNote = `p-values adjusted with epsilon = ${formatStat(eps)} (${mode.toUpperCase()})`;
  }
  return { rows, sphericity, epsilons, adjustNote };
}

export function curveTooltip(point: CurvePointDto): string {
  return `f=${point.f}, N=${point.n}: power ${formatStat(point.power)}`;
}
