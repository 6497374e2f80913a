import assert from "node:assert/strict";
import { test } from "node:test";

import { formatDf, formatInt, formatP, formatStat } from "../src/format";
import { loadGolden } from "./golden";

test("statistics render to 4 decimals", () => {
  assert.equal(formatStat(25.785451324589534), "25.7855");
  assert.equal(formatStat(2.066135988872435), "2.0661");
  assert.equal(formatStat(0.05), "0.0500");
});

test("p-values render to 3 decimals with a <0.001 floor", () => {
  assert.equal(formatP(0.13313348546029713), "0.133");
  assert.equal(formatP(0.0007664311250141775), "<0.001");
  assert.equal(formatP(0.001), "0.001");
  assert.equal(formatP(1e-300), "<0.001");
});

test("df renders like %g", () => {
  assert.equal(formatDf(4), "4");
  assert.equal(formatDf(16.0), "16");
  assert.equal(formatDf(2.4), "2.4");
  assert.equal(formatDf(0.25), "0.25");
});

test("achieved power matches the CLI line byte-for-byte", () => {
  const golden = loadGolden();
  for (const kind of ["between", "within", "interaction"] as const) {
    const payload = golden[`nsize_${kind}_json`];
    const text = golden[`nsize_${kind}_text`];
    const line = text
      .split("\n")
      .find((candidate) => candidate.startsWith("achieved power = "));
    assert.ok(line, "CLI output has an achieved power line");
    assert.equal(`achieved power = ${formatStat(payload.achieved_power)}`, line);
    assert.equal(
      text.split("\n")[0],
      `N = ${formatInt(payload.n_total)}`,
      "required N line matches",
    );
  }
});
