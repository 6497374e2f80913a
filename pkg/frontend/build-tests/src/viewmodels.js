"use strict";
/**
 * Pure payload-to-strings mappers for the three panels. Every string is a
 * formatting of a number taken verbatim from an API response; nothing here
 * computes a statistic. Keeping these pure makes display parity with the
 * CLI testable without a DOM.
 */
Object.defineProperty(exports, "__esModule", { value: true });
exports.powerPanelView = powerPanelView;
exports.mdeView = mdeView;
exports.anovaView = anovaView;
exports.curveTooltip = curveTooltip;
const format_1 = require("./format");
function powerPanelView(nsize, power) {
    return {
        nTotal: (0, format_1.formatInt)(nsize.n_total),
        nPerGroup: (0, format_1.formatInt)(nsize.n_per_group),
        achievedPower: (0, format_1.formatStat)(nsize.achieved_power),
        lambda: (0, format_1.formatStat)(nsize.lambda),
        dfPair: `(${(0, format_1.formatDf)(nsize.df1)}, ${(0, format_1.formatDf)(nsize.df2)})`,
        critF: (0, format_1.formatStat)(nsize.crit_f),
        powerAtN: (0, format_1.formatStat)(power.power),
        unconstrainedNote: nsize.n_unconstrained !== nsize.n_total
            ? `without the equal-allocation step: N = ${(0, format_1.formatInt)(nsize.n_unconstrained)} ` +
                `(power ${(0, format_1.formatStat)(nsize.power_unconstrained)})`
            : null,
    };
}
function mdeView(report) {
    return { f: (0, format_1.formatStat)(report.f), powerAtF: (0, format_1.formatStat)(report.power_at_f) };
}
function rowP(row, report, mode) {
    if (mode !== "none" && report.adjusted && row.source in report.adjusted[mode]) {
        return report.adjusted[mode][row.source];
    }
    return row.p;
}
function anovaView(report, mode = "none") {
    const rows = report.rows.map((row) => {
        const p = rowP(row, report, mode);
        return {
            source: row.source,
            ss: (0, format_1.formatStat)(row.ss),
            df: (0, format_1.formatDf)(row.df),
            ms: (0, format_1.formatStat)(row.ms),
            f: row.f === null ? "" : (0, format_1.formatStat)(row.f),
            p: p === null ? "" : (0, format_1.formatP)(p),
        };
    });
    const sph = report.sphericity;
    let sphericity = null;
    let epsilons = null;
    if (sph) {
        sphericity =
            `Mauchly W = ${(0, format_1.formatStat)(sph.mauchly_w)}, chi2 = ${(0, format_1.formatStat)(sph.chisq)}, ` +
                `df = ${(0, format_1.formatInt)(sph.df)}, p = ${(0, format_1.formatP)(sph.p)}`;
        epsilons =
            `GG = ${(0, format_1.formatStat)(sph.eps_gg)}, HF = ${(0, format_1.formatStat)(sph.eps_hf)} ` +
                `(lower bound ${(0, format_1.formatDf)(sph.eps_lower_bound)})`;
    }
    let adjustNote = null;
    if (mode !== "none" && sph) {
        const eps = mode === "gg" ? sph.eps_gg : sph.eps_hf;
        adjustNote = `p-values adjusted with epsilon = ${(0, format_1.formatStat)(eps)} (${mode.toUpperCase()})`;
    }
    return { rows, sphericity, epsilons, adjustNote };
}
function curveTooltip(point) {
    return `f=${point.f}, N=${point.n}: power ${(0, format_1.formatStat)(point.power)}`;
}
