import * as fs from "node:fs";
import * as path from "node:path";

import type { AnovaReport, NsizeReport } from "../src/api";

export interface GoldenFixtures {
  nsize_between_json: NsizeReport;
  nsize_between_text: string;
  nsize_within_json: NsizeReport;
  nsize_within_text: string;
  nsize_interaction_json: NsizeReport;
  nsize_interaction_text: string;
  anova_one_group_json: AnovaReport;
  anova_one_group_text: string;
  anova_three_groups_json: AnovaReport;
  anova_three_groups_text: string;
}

/**
 * Recorded CLI outputs and the JSON payloads the service returned for the
 * same inputs; regenerated with scripts documented in the README whenever
 * the backend formatting changes.
 */
export function loadGolden(): GoldenFixtures {
  const file = path.join(__dirname, "..", "..", "tests", "fixtures", "golden.json");
  return JSON.parse(fs.readFileSync(file, "utf-8")) as GoldenFixtures;
}

/** Cells of the CLI's aligned ANOVA table body, split on 2+ spaces. */
export function parseCliTableRows(text: string): string[][] {
  const lines = text.split("\n");
  const rows: string[][] = [];
  for (const line of lines.slice(1)) {
    if (!line.trim() || line.startsWith("sphericity:") || line.startsWith("epsilon:")) {
      continue;
    }
    rows.push(line.trim().split(/\s{2,}/));
  }
  return rows;
}
