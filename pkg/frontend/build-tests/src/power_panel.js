"use strict";
/**
 * What-if panel: the user adjusts the design and effect parameters and the
 * panel shows the required N (a-priori solve) plus the power at the N they
 * typed, both straight from the service.
 */
Object.defineProperty(exports, "__esModule", { value: true });
exports.initPowerPanel = initPowerPanel;
const api_1 = require("./api");
const debounce_1 = require("./debounce");
const viewmodels_1 = require("./viewmodels");
const format_1 = require("./format");
const validate_1 = require("./validate");
function num(id) {
    const el = document.getElementById(id);
    return Number(el.value);
}
function setText(id, text) {
    const el = document.getElementById(id);
    if (el) {
        el.textContent = text;
    }
}
function initPowerPanel() {
    const slot = new api_1.RequestSlot();
    const form = document.getElementById("power-form");
    const errorBox = document.getElementById("pp-error");
    const fSlider = document.getElementById("pp-f-slider");
    const fInput = document.getElementById("pp-f");
    function readForm() {
        const kind = document.getElementById("pp-kind")
            .value;
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
    function showFieldErrors(errors) {
        for (const field of ["g", "t", "n", "f", "rho", "eps", "alpha", "power"]) {
            const note = document.getElementById(`pp-err-${field}`);
            if (note) {
                note.textContent = errors[field] ?? "";
            }
        }
    }
    async function recompute() {
        const values = readForm();
        const errors = (0, validate_1.validateForm)(values, true);
        showFieldErrors(errors);
        if (!(0, validate_1.isValid)(errors)) {
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
                const power = await api_1.api.power({ ...base, n: values.n }, signal);
                const nsize = values.f > 0
                    ? await api_1.api.nsize({ ...base, power: values.power }, signal)
                    : null;
                return { power, nsize };
            });
            if (result === null) {
                return; // superseded by a newer request
            }
            setText("pp-out-power-at-n", (0, format_1.formatStat)(result.power.power));
            if (result.nsize) {
                const view = (0, viewmodels_1.powerPanelView)(result.nsize, result.power);
                setText("pp-out-n", view.nTotal);
                setText("pp-out-n-per-group", view.nPerGroup);
                setText("pp-out-achieved", view.achievedPower);
                setText("pp-out-lambda", view.lambda);
                setText("pp-out-df", view.dfPair);
                setText("pp-out-crit", view.critF);
                setText("pp-out-note", view.unconstrainedNote ?? "");
            }
            else {
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
    const debounced = (0, debounce_1.debounce)(() => {
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
