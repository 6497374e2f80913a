"use strict";
var __importDefault = (this && this.__importDefault) || function (mod) {
    return (mod && mod.__esModule) ? mod : { "default": mod };
};
Object.defineProperty(exports, "__esModule", { value: true });
const strict_1 = __importDefault(require("node:assert/strict"));
const node_test_1 = require("node:test");
const validate_1 = require("../src/validate");
const BASE = {
    kind: "between",
    g: 4,
    t: 5,
    n: 112,
    f: 0.25,
    rho: 0.5,
    eps: 1,
    alpha: 0.05,
    power: 0.8,
};
(0, node_test_1.test)("the reference scenario passes validation", () => {
    strict_1.default.ok((0, validate_1.isValid)((0, validate_1.validateForm)(BASE, true)));
});
// parity fixture list: every entry here is rejected by the service with a
// 400 (same invariant names); the form must block them before submission
const INVALID_CASES = [
    ["g below 1", { g: 0 }, "g"],
    ["between test with one group", { g: 1 }, "g"],
    ["interaction with one group", { kind: "interaction", g: 1 }, "g"],
    ["t below 2", { t: 1 }, "t"],
    ["N below 2 per group", { n: 7 }, "n"],
    ["negative f", { f: -0.1 }, "f"],
    ["rho at 1", { rho: 1 }, "rho"],
    ["rho below -1/(t-1)", { rho: -0.3 }, "rho"],
    ["eps above 1", { eps: 1.2 }, "eps"],
    ["eps below 1/(t-1)", { eps: 0.2 }, "eps"],
    ["alpha at 0", { alpha: 0 }, "alpha"],
    ["alpha at 1", { alpha: 1 }, "alpha"],
    ["power at 1", { power: 1 }, "power"],
    ["power not above alpha", { power: 0.04 }, "power"],
];
for (const [name, patch, field] of INVALID_CASES) {
    (0, node_test_1.test)(`rejects ${name}`, () => {
        const errors = (0, validate_1.validateForm)({ ...BASE, ...patch }, true);
        strict_1.default.ok(errors[field], `expected an error on field ${String(field)}`);
    });
}
(0, node_test_1.test)("one-group within design is allowed", () => {
    const errors = (0, validate_1.validateForm)({ ...BASE, kind: "within", g: 1, n: 10 }, true);
    strict_1.default.ok((0, validate_1.isValid)(errors));
});
(0, node_test_1.test)("negative rho above the bound is allowed", () => {
    const errors = (0, validate_1.validateForm)({ ...BASE, rho: -0.2 }, true);
    strict_1.default.ok((0, validate_1.isValid)(errors));
});
