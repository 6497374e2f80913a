"use strict";
/**
 * ANOVA panel: upload a wide CSV, render the table with sphericity
 * diagnostics, and toggle between unadjusted / GG / HF p-values (the
 * adjusted values arrive precomputed in the same response).
 */
Object.defineProperty(exports, "__esModule", { value: true });
exports.initAnovaPanel = initAnovaPanel;
const api_1 = require("./api");
const viewmodels_1 = require("./viewmodels");
function initAnovaPanel() {
    const fileInput = document.getElementById("ap-file");
    const errorBox = document.getElementById("ap-error");
    const tableBox = document.getElementById("ap-table");
    const notesBox = document.getElementById("ap-notes");
    let report = null;
    function currentMode() {
        const checked = document.querySelector('input[name="ap-adjust"]:checked');
        return checked?.value ?? "none";
    }
    function render() {
        if (!report) {
            return;
        }
        const view = (0, viewmodels_1.anovaView)(report, currentMode());
        const header = ["Source", "SS", "df", "MS", "F", "p"];
        const head = `<tr>${header.map((h) => `<th>${h}</th>`).join("")}</tr>`;
        const body = view.rows
            .map((row) => `<tr><td>${row.source}</td><td>${row.ss}</td><td>${row.df}</td>` +
            `<td>${row.ms}</td><td>${row.f}</td><td>${row.p}</td></tr>`)
            .join("");
        tableBox.innerHTML = `<table>${head}${body}</table>`;
        const notes = [];
        if (view.sphericity) {
            notes.push(`sphericity: ${view.sphericity}`);
        }
        if (view.epsilons) {
            notes.push(`epsilon: ${view.epsilons}`);
        }
        if (view.adjustNote) {
            notes.push(view.adjustNote);
        }
        notesBox.innerHTML = notes.map((line) => `<div>${line}</div>`).join("");
    }
    async function upload() {
        const file = fileInput.files?.[0];
        if (!file) {
            return;
        }
        errorBox.textContent = "";
        try {
            const text = await file.text();
            report = await api_1.api.anova(text);
            render();
        }
        catch (error) {
            tableBox.innerHTML = "";
            notesBox.innerHTML = "";
            report = null;
            if (error instanceof api_1.ApiError) {
                errorBox.textContent = `${error.kind}: ${error.message}`;
            }
            else {
                errorBox.textContent = String(error);
            }
        }
    }
    fileInput.addEventListener("change", () => void upload());
    document
        .querySelectorAll('input[name="ap-adjust"]')
        .forEach((radio) => radio.addEventListener("change", render));
}
