import { api } from "./api";
import { initAnovaPanel } from "./anova_panel";
import { initCurvePanel } from "./curve_panel";
import { initPowerPanel } from "./power_panel";

async function healthBadge(): Promise<void> {
  const badge = document.getElementById("health");
  if (!badge) {
    return;
  }
  try {
    const status = await api.health();
    badge.textContent = status.status === "ok" ? "service: online" : "service: ?";
    badge.className = "ok";
  } catch {
    badge.textContent = "service: unreachable";
    badge.className = "bad";
  }
}

document.addEventListener("DOMContentLoaded", () => {
  void healthBadge();
  initPowerPanel();
  initCurvePanel();
  initAnovaPanel();
});
