"use strict";
Object.defineProperty(exports, "__esModule", { value: true });
const api_1 = require("./api");
const anova_panel_1 = require("./anova_panel");
const curve_panel_1 = require("./curve_panel");
const power_panel_1 = require("./power_panel");
async function healthBadge() {
    const badge = document.getElementById("health");
    if (!badge) {
        return;
    }
    try {
        const status = await api_1.api.health();
        badge.textContent = status.status === "ok" ? "service: online" : "service: ?";
        badge.className = "ok";
    }
    catch {
        badge.textContent = "service: unreachable";
        badge.className = "bad";
    }
}
document.addEventListener("DOMContentLoaded", () => {
    void healthBadge();
    (0, power_panel_1.initPowerPanel)();
    (0, curve_panel_1.initCurvePanel)();
    (0, anova_panel_1.initAnovaPanel)();
});
