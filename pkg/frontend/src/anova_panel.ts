/**
 * ANOVA panel: upload a wide CSV, render the table with sphericity
 * diagnostics, and toggle between unadjusted / GG / HF p-values (the
 * adjusted values arrive precomputed in the same response).
 */

import { api, ApiError, type AnovaReport } from "./api";
import { anovaView, type AdjustMode } from "./viewmodels";

export function initAnovaPanel(): void {
  const fileInput = document.getElementById("ap-file") as HTMLInputElement;
  const errorBox = document.getElementById("ap-error") as HTMLElement;
  const tableBox = document.getElementById("ap-table") as HTMLElement;
  const notesBox = document.getElementById("ap-notes") as HTMLElement;
  let report: AnovaReport | null = null;

  function currentMode(): AdjustMode {
    const checked = document.querySelector<HTMLInputElement>(
      'input[name="ap-adjust"]:checked',
    );
    return (checked?.value as AdjustMode) ?? "none";
  }

  function render(): void {
    if (!report) {
      return;
    }
    const view = anovaView(report, currentMode());
    const header = ["Source", "SS", "df", "MS", "F", "p"];
    const head = `<tr>${header.map((h) => `<th>${h}</th>`).join("")}</tr>`;
    const body = view.rows
      .map(
        (row) =>
          `<tr><td>${row.source}</td><td>${row.ss}</td><td>${row.df}</td>` +
          `<td>${row.ms}</td><td>${row.f}</td><td>${row.p}</td></tr>`,
      )
      .join("");
    tableBox.innerHTML = `<table>${head}${body}</table>`;
    const notes: string[] = [];
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

  async function upload(): Promise<void> {
    const file = fileInput.files?.[0];
    if (!file) {
      return;
    }
    errorBox.textContent = "";
    try {
      const text = await file.text();
      report = await api.anova(text);
      render();
    } catch (error) {
      tableBox.innerHTML = "";
      notesBox.innerHTML = "";
      report = null;
      if (error instanceof ApiError) {
        errorBox.textContent = `${error.kind}: ${error.message}`;
      } else {
        errorBox.textContent = String(error);
      }
    }
  }

  fileInput.addEventListener("change", () => void upload());
  document
    .querySelectorAll<HTMLInputElement>('input[name="ap-adjust"]')
    .forEach((radio) => radio.addEventListener("change", render));
}
