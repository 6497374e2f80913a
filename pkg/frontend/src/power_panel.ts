/**
 * What-if panel: the user adjusts the design and effect parameters and the
 * panel shows the required N (a-priori solve) plus the power at the N they
 * typed, both straight from the service.
 */

import { api, RequestSlot, ApiError, type TestKind } from "./api";
import { debounce } from "./debounce";
import { powerPanelView } from "./viewmodels";
import { formatStat } from "./format";
import { validateForm, isValid, type FormValues } from "./validate";

function num(id: string): number {
  const el = document.getElementById(id) as HTMLInputElement;
  return Number(el.value);
}

function setText(id: string, text: string): void {
  const el = document.getElementById(id);
  if (el) {
    el.textContent = text;
  }
}

export function initPowerPanel(): void {
  const slot = new RequestSlot();
  const form = document.getElementById("power-form") as HTMLElement;
  const errorBox = document.getElementById("pp-error") as HTMLElement;
  const fSlider = document.getElementById("pp-f-slider") as HTMLInputElement;
  const fInput = document.getElementById("pp-f") as HTMLInputElement;

  function readForm(): FormValues {
    const kind = (document.getElementById("pp-kind") as HTMLSelectElement)
      .value as TestKind;
    return {
      kind,
      g: num("pp-g"),
      t: num("pp-t"),
      n: num("pp-n"),
      f: num("pp-f"),
      rho: num("pp-rho"),
      eps: num("pp-eps"),
      alpha: num("pp-alpha"),
      power: num("pp-power"),
    };
  }

  function showFieldErrors(errors: ReturnType<typeof validateForm>): void {
    for (const field of ["g", "t", "n", "f", "rho", "eps", "alpha", "power"]) {
      const note = document.getElementById(`pp-err-${field}`);
      if (note) {
        note.textContent = (errors as Record<string, string>)[field] ?? "";
      }
    }
  }

  async function recompute(): Promise<void> {
    const values = readForm();
    const errors = validateForm(values, true);
    showFieldErrors(errors);
    if (!isValid(errors)) {
      errorBox.textContent = "fix the highlighted fields to recompute";
      return;
    }
    errorBox.textContent = "";

    const base = {
      kind: values.kind,
      g: values.g,
      t: values.t,
      f: values.f,
      rho: values.rho,
      eps: values.eps,
      alpha: values.alpha,
    };
    try {
      const result = await slot.run(async (signal) => {
        const power = await api.power({ ...base, n: values.n }, signal);
        const nsize =
          values.f > 0
            ? await api.nsize({ ...base, power: values.power }, signal)
            : null;
        return { power, nsize };
      });
      if (result === null) {
        return; // superseded by a newer request
      }
      setText("pp-out-power-at-n", formatStat(result.power.power));
      if (result.nsize) {
        const view = powerPanelView(result.nsize, result.power);
        setText("pp-out-n", view.nTotal);
        setText("pp-out-n-per-group", view.nPerGroup);
        setText("pp-out-achieved", view.achievedPower);
        setText("pp-out-lambda", view.lambda);
        setText("pp-out-df", view.dfPair);
        setText("pp-out-crit", view.critF);
        setText("pp-out-note", view.unconstrainedNote ?? "");
      } else {
        for (const id of [
          "pp-out-n",
          "pp-out-n-per-group",
          "pp-out-achieved",
          "pp-out-lambda",
          "pp-out-df",
          "pp-out-crit",
        ]) {
          setText(id, "-");
        }
        setText("pp-out-note", "a-priori N needs f > 0");
      }
    } catch (error) {
      if (error instanceof ApiError) {
        errorBox.textContent = `${error.status}: ${error.message}`;
      } else {
        errorBox.textContent = String(error);
      }
    }
  }

  const debounced = debounce(() => {
    void recompute();
  }, 200);

  fSlider.addEventListener("input", () => {
    fInput.value = fSlider.value;
    debounced();
  });
  fInput.addEventListener("input", () => {
    fSlider.value = fInput.value;
    debounced();
  });
  form.addEventListener("input", (event) => {
    if (event.target !== fSlider && event.target !== fInput) {
      debounced();
    }
  });

  void recompute();
}
