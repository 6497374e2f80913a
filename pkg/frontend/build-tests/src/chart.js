"use strict";
/**
 * Client-side SVG line chart for curve responses (presentation only; the
 * plotted numbers come straight from /api/curve). Hover values use native
 * <title> tooltips.
 */
Object.defineProperty(exports, "__esModule", { value: true });
exports.buildChartSvg = buildChartSvg;
const viewmodels_1 = require("./viewmodels");
const PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];
const WIDTH = 640;
const HEIGHT = 400;
const LEFT = 52;
const RIGHT = 120;
const TOP = 20;
const BOTTOM = 44;
function buildChartSvg(points) {
    if (points.length === 0) {
        return `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="80"><text x="10" y="40">no points</text></svg>`;
    }
    const nValues = points.map((p) => p.n);
    const nMin = Math.min(...nValues);
    const nMax = Math.max(...nValues);
    const span = Math.max(1, nMax - nMin);
    const sx = (n) => LEFT + ((n - nMin) / span) * (WIDTH - LEFT - RIGHT);
    const sy = (power) => TOP + (1 - power) * (HEIGHT - TOP - BOTTOM);
    const byF = new Map();
    for (const point of points) {
        const bucket = byF.get(point.f);
        if (bucket) {
            bucket.push(point);
        }
        else {
            byF.set(point.f, [point]);
        }
    }
    const parts = [
        `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="sans-serif" font-size="11">`,
        `<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`,
        `<line x1="${LEFT}" y1="${TOP}" x2="${LEFT}" y2="${sy(0)}" stroke="#333"/>`,
        `<line x1="${LEFT}" y1="${sy(0)}" x2="${WIDTH - RIGHT}" y2="${sy(0)}" stroke="#333"/>`,
    ];
    for (let tick = 0; tick <= 10; tick += 2) {
        const y = sy(tick / 10);
        parts.push(`<line x1="${LEFT - 4}" y1="${y}" x2="${LEFT}" y2="${y}" stroke="#333"/>`, `<text x="${LEFT - 7}" y="${y + 3}" text-anchor="end">${(tick / 10).toFixed(1)}</text>`);
    }
    const tickCount = 4;
    for (let i = 0; i <= tickCount; i += 1) {
        const n = Math.round(nMin + (i * span) / tickCount);
        parts.push(`<line x1="${sx(n)}" y1="${sy(0)}" x2="${sx(n)}" y2="${sy(0) + 4}" stroke="#333"/>`, `<text x="${sx(n)}" y="${sy(0) + 16}" text-anchor="middle">${n}</text>`);
    }
    parts.push(`<text x="${(LEFT + WIDTH - RIGHT) / 2}" y="${HEIGHT - 8}" text-anchor="middle">total sample size N</text>`);
    let legendY = TOP + 8;
    let seriesIndex = 0;
    for (const [fValue, series] of byF) {
        const color = PALETTE[seriesIndex % PALETTE.length];
        const sorted = [...series].sort((a, b) => a.n - b.n);
        if (sorted.length > 1) {
            const coords = sorted
                .map((p) => `${sx(p.n).toFixed(1)},${sy(p.power).toFixed(1)}`)
                .join(" ");
            parts.push(`<polyline points="${coords}" fill="none" stroke="${color}" stroke-width="2"/>`);
        }
        for (const p of sorted) {
            parts.push(`<circle cx="${sx(p.n).toFixed(1)}" cy="${sy(p.power).toFixed(1)}" r="3.5" fill="${color}" fill-opacity="0.85">` +
                `<title>${(0, viewmodels_1.curveTooltip)(p)}</title></circle>`);
        }
        parts.push(`<line x1="${WIDTH - RIGHT + 12}" y1="${legendY}" x2="${WIDTH - RIGHT + 34}" y2="${legendY}" stroke="${color}" stroke-width="2"/>`, `<text x="${WIDTH - RIGHT + 40}" y="${legendY + 4}">f = ${fValue}</text>`);
        legendY += 18;
        seriesIndex += 1;
    }
    parts.push("</svg>");
    return parts.join("");
}
