"use strict";
var __importDefault = (this && this.__importDefault) || function (mod) {
    return (mod && mod.__esModule) ? mod : { "default": mod };
};
Object.defineProperty(exports, "__esModule", { value: true });
const strict_1 = __importDefault(require("node:assert/strict"));
const node_test_1 = require("node:test");
const debounce_1 = require("../src/debounce");
const sleep = (ms) => new Promise((resolve) => setTimeout(resolve, ms));
(0, node_test_1.test)("a burst collapses to one trailing call with the last arguments", async () => {
    const calls = [];
    const debounced = (0, debounce_1.debounce)((value) => calls.push(value), 25);
    debounced(1);
    debounced(2);
    debounced(3);
    await sleep(60);
    strict_1.default.deepEqual(calls, [3]);
});
(0, node_test_1.test)("spaced calls each fire", async () => {
    const calls = [];
    const debounced = (0, debounce_1.debounce)((value) => calls.push(value), 15);
    debounced(1);
    await sleep(40);
    debounced(2);
    await sleep(40);
    strict_1.default.deepEqual(calls, [1, 2]);
});
(0, node_test_1.test)("cancel drops the pending call", async () => {
    const calls = [];
    const debounced = (0, debounce_1.debounce)((value) => calls.push(value), 20);
    debounced(1);
    debounced.cancel();
    await sleep(50);
    strict_1.default.deepEqual(calls, []);
});
