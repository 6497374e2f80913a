"use strict";
/**
 * Typed client for the rmpower JSON API. All statistics displayed anywhere
 * in the UI originate from these response payloads; the client never
 * computes one.
 */
Object.defineProperty(exports, "__esModule", { value: true });
exports.RequestSlot = exports.api = exports.ApiError = void 0;
class ApiError extends Error {
    constructor(status, kind, message) {
        super(message);
        this.status = status;
        this.kind = kind;
    }
}
exports.ApiError = ApiError;
async function postJson(path, body, signal) {
    const response = await fetch(path, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(body),
        signal,
    });
    return handleResponse(response);
}
async function handleResponse(response) {
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
        }
        catch {
            // non-JSON error body: keep raw text
        }
        throw new ApiError(response.status, kind, message);
    }
    return JSON.parse(text);
}
exports.api = {
    health(signal) {
        return fetch("/api/health", { signal }).then((r) => handleResponse(r));
    },
    nsize(body, signal) {
        return postJson("/api/nsize", body, signal);
    },
    power(body, signal) {
        return postJson("/api/power", body, signal);
    },
    mde(body, signal) {
        return postJson("/api/mde", body, signal);
    },
    curve(body, signal) {
        return postJson("/api/curve", body, signal);
    },
    async anova(csvText, signal) {
        const response = await fetch("/api/anova", {
            method: "POST",
            headers: { "Content-Type": "text/csv" },
            body: csvText,
            signal,
        });
        return handleResponse(response);
    },
};
/**
 * Latest-wins request slot: starting a new request aborts the in-flight
 * one, so a panel never renders a stale response.
 */
class RequestSlot {
    constructor() {
        this.controller = null;
    }
    async run(task) {
        if (this.controller) {
            this.controller.abort();
        }
        const controller = new AbortController();
        this.controller = controller;
        try {
            return await task(controller.signal);
        }
        catch (error) {
            if (controller.signal.aborted) {
                return null; // superseded; the newer request will render
            }
            throw error;
        }
        finally {
            if (this.controller === controller) {
                this.controller = null;
            }
        }
    }
}
exports.RequestSlot = RequestSlot;
