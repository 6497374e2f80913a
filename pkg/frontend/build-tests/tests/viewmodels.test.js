"use strict";
var __importDefault = (this && this.__importDefault) || function (mod) {
    return (mod && mod.__esModule) ? mod : { "default": mod };
};
Object.defineProperty(exports, "__esModule", { value: true });
const strict_1 = __importDefault(require("node:assert/strict"));
const node_test_1 = require("node:test");
const viewmodels_1 = require("../src/viewmodels");
const golden_1 = require("./golden");
const golden = (0, golden_1.loadGolden)();
function fakePowerReport(power) {
    return {
        schema_version: 1,
        report: "power",
        inputs: {},
        power,
        crit_f: 2.0,
        lambda: 1.0,
        df1: 3,
        df2: 10,
    };
}
(0, node_test_1.test)("required-N readouts equal the CLI numbers for all three scenarios", () => {
    const expected = { between: "112", within: "24", interaction: "32" };
    for (const kind of ["between", "within", "interaction"]) {
        const view = (0, viewmodels_1.powerPanelView)(golden[`nsize_${kind}_json`], fakePowerReport(0.5));
        strict_1.default.equal(view.nTotal, expected[kind]);
        const cliFirstLine = golden[`nsize_${kind}_text`].split("\n")[0];
        strict_1.default.equal(`N = ${view.nTotal}`, cliFirstLine);
        strict_1.default.ok(golden[`nsize_${kind}_text`].includes(`achieved power = ${view.achievedPower}`));
    }
});
(0, node_test_1.test)("the step-g vs integer discrepancy note is surfaced", () => {
    const view = (0, viewmodels_1.powerPanelView)(golden.nsize_within_json, fakePowerReport(0.5));
    strict_1.default.ok(view.unconstrainedNote);
    strict_1.default.ok(view.unconstrainedNote.includes("N = 21"));
});
(0, node_test_1.test)("anova rows equal the CLI table cells byte-for-byte", () => {
    for (const name of ["one_group", "three_groups"]) {
        const view = (0, viewmodels_1.anovaView)(golden[`anova_${name}_json`]);
        const cliRows = (0, golden_1.parseCliTableRows)(golden[`anova_${name}_text`]);
        strict_1.default.equal(view.rows.length, cliRows.length);
        view.rows.forEach((row, index) => {
            const cells = [row.source, row.ss, row.df, row.ms, row.f, row.p].filter((cell) => cell !== "");
            strict_1.default.deepEqual(cells, cliRows[index], `row ${row.source} of ${name}`);
        });
    }
});
(0, node_test_1.test)("sphericity and epsilon lines equal the CLI lines", () => {
    for (const name of ["one_group", "three_groups"]) {
        const view = (0, viewmodels_1.anovaView)(golden[`anova_${name}_json`]);
        const text = golden[`anova_${name}_text`];
        strict_1.default.ok(view.sphericity);
        strict_1.default.ok(view.epsilons);
        strict_1.default.ok(text.includes(`sphericity: ${view.sphericity}`));
        strict_1.default.ok(text.includes(`epsilon: ${view.epsilons}`));
    }
});
(0, node_test_1.test)("GG/HF toggles use the server-adjusted p-values, not a recomputation", () => {
    const report = golden.anova_three_groups_json;
    const view = (0, viewmodels_1.anovaView)(report, "gg");
    const timeRow = view.rows.find((row) => row.source === "Time");
    strict_1.default.ok(timeRow);
    strict_1.default.ok(report.adjusted);
    const serverValue = report.adjusted.gg["Time"];
    // the rendered string is exactly the formatting of the server's number
    strict_1.default.equal(timeRow.p, serverValue < 0.001 ? "<0.001" : serverValue.toFixed(3));
    strict_1.default.ok(view.adjustNote && view.adjustNote.includes("GG"));
});
(0, node_test_1.test)("toggle with epsilon = 1 leaves p-values unchanged", () => {
    const base = golden.anova_one_group_json;
    const identity = {
        ...base,
        sphericity: base.sphericity && { ...base.sphericity, eps_gg: 1.0 },
        adjusted: {
            gg: Object.fromEntries(base.rows.filter((r) => r.p !== null).map((r) => [r.source, r.p])),
            hf: {},
        },
    };
    const plain = (0, viewmodels_1.anovaView)(identity, "none");
    const adjusted = (0, viewmodels_1.anovaView)(identity, "gg");
    adjusted.rows.forEach((row, index) => {
        strict_1.default.equal(row.p, plain.rows[index].p);
    });
});
(0, node_test_1.test)("view models pass sentinel payload values through verbatim", () => {
    // proves the panel displays response numbers rather than computing its own
    const sentinel = {
        schema_version: 1,
        report: "nsize",
        inputs: {},
        n_total: 777,
        n_per_group: 111,
        achieved_power: 0.123456789,
        n_unconstrained: 777,
        power_unconstrained: 0.123456789,
        crit_f: 9.87654321,
        lambda: 55.5555555,
        df1: 6,
        df2: 770,
    };
    const view = (0, viewmodels_1.powerPanelView)(sentinel, fakePowerReport(0.42424242));
    strict_1.default.equal(view.nTotal, "777");
    strict_1.default.equal(view.achievedPower, "0.1235");
    strict_1.default.equal(view.critF, "9.8765");
    strict_1.default.equal(view.lambda, "55.5556");
    strict_1.default.equal(view.dfPair, "(6, 770)");
    strict_1.default.equal(view.powerAtN, "0.4242");
    strict_1.default.equal(view.unconstrainedNote, null);
    const mde = (0, viewmodels_1.mdeView)({
        schema_version: 1,
        report: "mde",
        inputs: {},
        f: 0.3182674,
        power_at_f: 0.79999999,
    });
    strict_1.default.equal(mde.f, "0.3183");
    strict_1.default.equal(mde.powerAtF, "0.8000");
});
