/**
 * Power-curve panel: a grid of effect sizes and sample sizes plotted as
 * one line per f; exports download the server-rendered SVG/CSV so the
 * files match the CLI's byte-for-byte.
 */

import { api, ApiError, RequestSlot, type CurveReport, type TestKind } from "./api";
import { buildChartSvg } from "./chart";
import { debounce } from "./debounce";

function parseFValues(raw: string): number[] | null {
  const parts = raw.split(",").map((part) => part.trim()).filter(Boolean);
  if (parts.length === 0) {
    return null;
  }
  const values = parts.map(Number);
  return values.every((v) => Number.isFinite(v) && v > 0) ? values : null;
}

export function initCurvePanel(): void {
  const slot = new RequestSlot();
  const form = document.getElementById("curve-form") as HTMLElement;
  const errorBox = document.getElementById("cp-error") as HTMLElement;
  const chartBox = document.getElementById("cp-chart") as HTMLElement;
  let lastRequest: Record<string, unknown> | null = null;

  function readRequest(): Record<string, unknown> | null {
    const kind = (document.getElementById("cp-kind") as HTMLSelectElement)
      .value as TestKind;
    const g = Number((document.getElementById("cp-g") as HTMLInputElement).value);
    const t = Number((document.getElementById("cp-t") as HTMLInputElement).value);
    const rho = Number((document.getElementById("cp-rho") as HTMLInputElement).value);
    const eps = Number((document.getElementById("cp-eps") as HTMLInputElement).value);
    const alpha = Number(
      (document.getElementById("cp-alpha") as HTMLInputElement).value,
    );
    const fValues = parseFValues(
      (document.getElementById("cp-f-values") as HTMLInputElement).value,
    );
    const start = Number((document.getElementById("cp-n-start") as HTMLInputElement).value);
    const stop = Number((document.getElementById("cp-n-stop") as HTMLInputElement).value);
    const step = Number((document.getElementById("cp-n-step") as HTMLInputElement).value);
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

  async function recompute(): Promise<void> {
    const request = readRequest();
    if (!request) {
      return;
    }
    try {
      const report = await slot.run<CurveReport>((signal) =>
        api.curve(request, signal),
      );
      if (report === null) {
        return;
      }
      lastRequest = request;
      chartBox.innerHTML = buildChartSvg(report.points);
    } catch (error) {
      if (error instanceof ApiError) {
        errorBox.textContent = `${error.status}: ${error.message}`;
      } else {
        errorBox.textContent = String(error);
      }
    }
  }

  async function download(format: "svg" | "csv"): Promise<void> {
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

  const debounced = debounce(() => {
    void recompute();
  }, 200);
  form.addEventListener("input", debounced);
  (document.getElementById("cp-export-svg") as HTMLButtonElement).addEventListener(
    "click",
    () => void download("svg"),
  );
  (document.getElementById("cp-export-csv") as HTMLButtonElement).addEventListener(
    "click",
    () => void download("csv"),
  );

  void recompute();
}
