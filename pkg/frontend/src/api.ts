/**
 * Typed client for the rmpower JSON API. All statistics displayed anywhere
 * in the UI originate from these response payloads; the client never
 * computes one.
 */

export type TestKind = "between" | "within" | "interaction";

export interface EffectInputs {
  f: number;
  rho: number;
  eps: number;
  alpha: number;
  target_power: number;
}

export interface NsizeReport {
  schema_version: number;
  report: "nsize";
  inputs: Record<string, unknown>;
  n_total: number;
  n_per_group: number;
  achieved_power: number;
  n_unconstrained: number;
  power_unconstrained: number;
  crit_f: number;
  lambda: number;
  df1: number;
  df2: number;
}

export interface PowerReport {
  schema_version: number;
  report: "power";
  inputs: Record<string, unknown>;
  power: number;
  crit_f: number;
  lambda: number;
  df1: number;
  df2: number;
}

export interface MdeReport {
  schema_version: number;
  report: "mde";
  inputs: Record<string, unknown>;
  f: number;
  power_at_f: number;
}

export interface CurvePointDto {
  f: number;
  n: number;
  power: number;
}

export interface CurveReport {
  schema_version: number;
  report: "curve";
  inputs: Record<string, unknown>;
  points: CurvePointDto[];
}

export interface AnovaRowDto {
  source: string;
  ss: number;
  df: number;
  ms: number;
  f: number | null;
  df_error: number | null;
  p: number | null;
}

export interface SphericityDto {
  mauchly_w: number;
  chisq: number;
  df: number;
  p: number;
  eps_gg: number;
  eps_hf: number;
  eps_lower_bound: number;
}

export interface AnovaReport {
  schema_version: number;
  report: "anova";
  rows: AnovaRowDto[];
  sphericity: SphericityDto | null;
  adjusted: { gg: Record<string, number>; hf: Record<string, number> } | null;
  epsilon_applied: number | null;
}

export class ApiError extends Error {
  readonly status: number;
  readonly kind: string;

  constructor(status: number, kind: string, message: string) {
    super(message);
    this.status = status;
    this.kind = kind;
  }
}

async function postJson<T>(
  path: string,
  body: unknown,
  signal?: AbortSignal,
): Promise<T> {
  const response = await fetch(path, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
    signal,
  });
  return handleResponse<T>(response);
}

async function handleResponse<T>(response: Response): Promise<T> {
  const text = await response.text();
  if (!response.ok) {
    let kind = "error";
    let message = text || response.statusText;
    try {
      const parsed = JSON.parse(text);
      if (parsed && parsed.error) {
        kind = String(parsed.error.type);
        message = String(parsed.error.message);
      }
    } catch {
      // non-JSON error body: keep raw text
    }
    throw new ApiError(response.status, kind, message);
  }
  return JSON.parse(text) as T;
}

export const api = {
  health(signal?: AbortSignal): Promise<{ status: string }> {
    return fetch("/api/health", { signal }).then((r) =>
      handleResponse<{ status: string }>(r),
    );
  },

  nsize(body: Record<string, unknown>, signal?: AbortSignal): Promise<NsizeReport> {
    return postJson<NsizeReport>("/api/nsize", body, signal);
  },

  power(body: Record<string, unknown>, signal?: AbortSignal): Promise<PowerReport> {
    return postJson<PowerReport>("/api/power", body, signal);
  },

  mde(body: Record<string, unknown>, signal?: AbortSignal): Promise<MdeReport> {
    return postJson<MdeReport>("/api/mde", body, signal);
  },

  curve(body: Record<string, unknown>, signal?: AbortSignal): Promise<CurveReport> {
    return postJson<CurveReport>("/api/curve", body, signal);
  },

  async anova(csvText: string, signal?: AbortSignal): Promise<AnovaReport> {
    const response = await fetch("/api/anova", {
      method: "POST",
      headers: { "Content-Type": "text/csv" },
      body: csvText,
      signal,
    });
    return handleResponse<AnovaReport>(response);
  },
};

/**
 * Latest-wins request slot: starting a new request aborts the in-flight
 * one, so a panel never renders a stale response.
 */
export class RequestSlot {
  private controller: AbortController | null = null;

  async run<T>(task: (signal: AbortSignal) => Promise<T>): Promise<T | null> {
    if (this.controller) {
      this.controller.abort();
    }
    const controller = new AbortController();
    this.controller = controller;
    try {
      return await task(controller.signal);
    } catch (error) {
      if (controller.signal.aborted) {
        return null; // superseded; the newer request will render
      }
      throw error;
    } finally {
      if (this.controller === controller) {
        this.controller = null;
      }
    }
  }
}
