"use strict";
/**
 * Power-curve panel: a grid of effect sizes and sample sizes plotted as
 * one line per f; exports download the server-rendered SVG/CSV so the
 * files match the CLI's byte-for-byte.
 */
Object.defineProperty(exports, "__esModule", { value: true });
exports.initCurvePanel = initCurvePanel;
const api_1 = require("./api");
const chart_1 = require("./chart");
const debounce_1 = require("./debounce");
function parseFValues(raw) {
    const parts = raw.split(",").map((part) => part.trim()).filter(Boolean);
    if (parts.length === 0) {
        return null;
    }
    const values = parts.map(Number);
    return values.every((v) => Number.isFinite(v) && v > 0) ? values : null;
}
function initCurvePanel() {
    const slot = new api_1.RequestSlot();
    const form = document.getElementById("curve-form");
    const errorBox = document.getElementById("cp-error");
    const chartBox = document.getElementById("cp-chart");
    let lastRequest = null;
    function readRequest() {
        const kind = document.getElementById("cp-kind")
            .value;
        const g = Number(document.getElementById("cp-g").value);
        const t = Number(document.getElementById("cp-t").value);
        const rho = Number(document.getElementById("cp-rho").value);
        const eps = Number(document.getElementById("cp-eps").value);
        const alpha = Number(document.getElementById("cp-alpha").value);
        const fValues = parseFValues(document.getElementById("cp-f-values").value);
        const start = Number(document.getElementById("cp-n-start").value);
        const stop = Number(document.getElementById("cp-n-stop").value);
        const step = Number(document.getElementById("cp-n-step").value);
        if (!fValues) {
            errorBox.textContent = "effect sizes must be positive numbers, comma separated";
            return null;
        }
        if (!(Number.isInteger(start) && Number.isInteger(stop) && Number.isInteger(step))) {
            errorBox.textContent = "N range fields must be integers";
            return null;
        }
        if (stop < start || step < 1) {
            errorBox.textContent = "N range must be increasing";
            return null;
        }
        errorBox.textContent = "";
        return {
            kind,
            g,
            t,
            rho,
            eps,
            alpha,
            f_values: fValues,
            n_range: [start, stop, step],
        };
    }
    async function recompute() {
        const request = readRequest();
        if (!request) {
            return;
        }
        try {
            const report = await slot.run((signal) => api_1.api.curve(request, signal));
            if (report === null) {
                return;
            }
            lastRequest = request;
            chartBox.innerHTML = (0, chart_1.buildChartSvg)(report.points);
        }
        catch (error) {
            if (error instanceof api_1.ApiError) {
                errorBox.textContent = `${error.status}: ${error.message}`;
            }
            else {
                errorBox.textContent = String(error);
            }
        }
    }
    async function download(format) {
        if (!lastRequest) {
            return;
        }
        const response = await fetch("/api/curve", {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify({ ...lastRequest, format }),
        });
        if (!response.ok) {
            errorBox.textContent = `export failed (${response.status})`;
            return;
        }
        const blob = await response.blob();
        const url = URL.createObjectURL(blob);
        const anchor = document.createElement("a");
        anchor.href = url;
        anchor.download = `power_curve.${format}`;
        anchor.click();
        URL.revokeObjectURL(url);
    }
    const debounced = (0, debounce_1.debounce)(() => {
        void recompute();
    }, 200);
    form.addEventListener("input", debounced);
    document.getElementById("cp-export-svg").addEventListener("click", () => void download("svg"));
    document.getElementById("cp-export-csv").addEventListener("click", () => void download("csv"));
    void recompute();
}
