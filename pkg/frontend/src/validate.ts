/**
 * Form-level constraints, mirroring the service's input invariants so the
 * UI rejects exactly what the core rejects (the parity fixture list in the
 * tests tracks this).
 */

import type { TestKind } from "./api";

export interface FormValues {
  kind: TestKind;
  g: number;
  t: number;
  n?: number;
  f: number;
  rho: number;
  eps: number;
  alpha: number;
  power: number;
}

export type FieldErrors = Partial<Record<keyof FormValues, string>>;

export function validateForm(values: FormValues, requireN = false): FieldErrors {
  const errors: FieldErrors = {};

  if (!Number.isInteger(values.g) || values.g < 1) {
    errors.g = "groups must be an integer >= 1";
  } else if (values.kind !== "within" && values.g < 2) {
    errors.g = "between-groups and interaction tests need g >= 2";
  }

  if (!Number.isInteger(values.t) || values.t < 2) {
    errors.t = "time points must be an integer >= 2";
  }

  if (requireN || values.n !== undefined) {
    const n = values.n ?? NaN;
    if (!Number.isInteger(n)) {
      errors.n = "N must be an integer";
    } else if (!errors.g && n < 2 * values.g) {
      errors.n = `N must allow 2 subjects per group (>= ${2 * values.g})`;
    }
  }

  if (!(values.f >= 0)) {
    errors.f = "effect size f must be >= 0";
  }

  if (!errors.t) {
    const rhoLower = -1 / (values.t - 1);
    if (!(values.rho > rhoLower && values.rho < 1)) {
      errors.rho = `correlation must lie in (${rhoLower.toFixed(4)}, 1) for t=${values.t}`;
    }
    const epsLower = 1 / (values.t - 1);
    if (!(values.eps >= epsLower && values.eps <= 1)) {
      errors.eps = `epsilon must lie in [${epsLower.toFixed(4)}, 1] for t=${values.t}`;
    }
  }

  if (!(values.alpha > 0 && values.alpha < 1)) {
    errors.alpha = "alpha must lie in (0, 1)";
  }

  if (!(values.power > 0 && values.power < 1)) {
    errors.power = "target power must lie in (0, 1)";
  } else if (!errors.alpha && values.power <= values.alpha) {
    errors.power = "target power must exceed alpha";
  }

  return errors;
}

export function isValid(errors: FieldErrors): boolean {
  return Object.keys(errors).length === 0;
}
