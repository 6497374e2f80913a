"use strict";
/**
 * Number rendering, kept byte-identical with the CLI's text output:
 * statistics at 4 decimals, p-values at 3 decimals with the "<0.001"
 * floor, degrees of freedom in %g style.
 */
Object.defineProperty(exports, "__esModule", { value: true });
exports.formatStat = formatStat;
exports.formatP = formatP;
exports.formatDf = formatDf;
exports.formatInt = formatInt;
function formatStat(x) {
    return x.toFixed(4);
}
function formatP(p) {
    if (p < 0.001) {
        return "<0.001";
    }
    return p.toFixed(3);
}
function formatDf(df) {
    // mirrors printf %g for the magnitudes that occur in ANOVA tables
    return String(Number(df.toPrecision(6)));
}
function formatInt(n) {
    return String(Math.round(n));
}
