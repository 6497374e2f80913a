import assert from "node:assert/strict";
import { test } from "node:test";

import { debounce } from "../src/debounce";

const sleep = (ms: number) => new Promise((resolve) => setTimeout(resolve, ms));

test("a burst collapses to one trailing call with the last arguments", async () => {
  const calls: number[] = [];
  const debounced = debounce((value: number) => calls.push(value), 25);
  debounced(1);
  debounced(2);
  debounced(3);
  await sleep(60);
  assert.deepEqual(calls, [3]);
});

test("spaced calls each fire", async () => {
  const calls: number[] = [];
  const debounced = debounce((value: number) => calls.push(value), 15);
  debounced(1);
  await sleep(40);
  debounced(2);
  await sleep(40);
  assert.deepEqual(calls, [1, 2]);
});

test("cancel drops the pending call", async () => {
  const calls: number[] = [];
  const debounced = debounce((value: number) => calls.push(value), 20);
  debounced(1);
  debounced.cancel();
  await sleep(50);
  assert.deepEqual(calls, []);
});
