"""Local HTTP API and static UI host.

Endpoints (JSON in/out unless noted):

    GET  /api/health            liveness check
    POST /api/power             {kind, g, t, n, f?, rho?, eps?, alpha?}
    POST /api/nsize             {kind, g, t, f?, rho?, eps?, alpha?, power?}
    POST /api/mde               {kind, g, t, n, rho?, eps?, alpha?, power?}
    POST /api/curve             {kind, g, t, f_values, n_values | n_range,
                                 rho?, eps?, alpha?, format?: "svg"|"csv"}
    POST /api/anova             CSV body (wide; ?long=1 for long format,
                                 ?friedman=1 for the rank test)
    POST /api/simulate          {kind, g, t, n, f?, rho?, alpha?, reps?, seed?}

Handlers call the same pure core functions as the CLI and serialize with
the same canonical JSON, so the two surfaces answer identically. Invalid
inputs return 400 with a structured body; unsatisfiable solver requests
return 422. The service is stateless and binds to loopback by default.
"""

from __future__ import annotations

import json
import os
from dataclasses import replace
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlparse

from . import report
from .csvio import curve_to_csv, parse_long_csv, parse_wide_csv
from .errors import RmPowerError, UnsatisfiableError
from .mcvalidate import SimSpec, estimate_power_mc
from .power import (
    EffectSpec,
    StudyDesign,
    TestKind,
    compute_power,
    minimal_detectable_effect,
    power_curve,
    required_sample_size,
)
from .rmanova import friedman_test, multi_sample_rm_anova, one_sample_rm_anova
from .svgplot import curve_svg

DEFAULT_PORT = 8707
PORT_ENV = "RMPOWER_PORT"
UI_ENV = "RMPOWER_UI"

_CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".mjs": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".json": "application/json",
    ".svg": "image/svg+xml",
    ".map": "application/json",
    ".png": "image/png",
    ".ico": "image/x-icon",
}

_FALLBACK_PAGE = """<!doctype html>
<html><head><meta charset="utf-8"><title>rmpower API</title></head>
<body><h1>rmpower service</h1>
<p>The interactive UI bundle is not installed. The JSON API is live:</p>
<ul>
<li>GET /api/health</li>
<li>POST /api/power, /api/nsize, /api/mde, /api/curve, /api/simulate</li>
<li>POST /api/anova (CSV body)</li>
</ul></body></html>
"""


class _BadRequest(Exception):
    """Maps to HTTP 400 with a structured error body."""


def _effect_from(payload: dict, allow: tuple[str, ...]) -> EffectSpec:
    mapping = {
        "f": "f",
        "rho": "rho",
        "eps": "epsilon",
        "alpha": "alpha",
        "power": "target_power",
    }
    overrides = {}
    for key in allow:
        if key in payload and payload[key] is not None:
            try:
                overrides[mapping[key]] = float(payload[key])
            except (TypeError, ValueError):
                raise _BadRequest(f"field {key!r} must be a number")
    return EffectSpec(**overrides)


def _get_int(payload: dict, key: str) -> int:
    if key not in payload:
        raise _BadRequest(f"missing required field {key!r}")
    value = payload[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise _BadRequest(f"field {key!r} must be an integer")
    if float(value) != int(value):
        raise _BadRequest(f"field {key!r} must be an integer")
    return int(value)


def _get_kind(payload: dict) -> TestKind:
    if "kind" not in payload:
        raise _BadRequest("missing required field 'kind'")
    return TestKind.parse(str(payload["kind"]))


def _handle_power(payload: dict) -> dict:
    kind = _get_kind(payload)
    design = StudyDesign(_get_int(payload, "g"), _get_int(payload, "t"), _get_int(payload, "n"))
    eff = _effect_from(payload, ("f", "rho", "eps", "alpha"))
    result = compute_power(kind, design, eff)
    return report.power_report(result, kind, design, eff)


def _handle_nsize(payload: dict) -> dict:
    kind = _get_kind(payload)
    groups = _get_int(payload, "g")
    times = _get_int(payload, "t")
    eff = _effect_from(payload, ("f", "rho", "eps", "alpha", "power"))
    result = required_sample_size(kind, groups, times, eff)
    achieved = compute_power(kind, StudyDesign(groups, times, result.n_total), eff)
    return report.nsize_report(result, achieved, kind, groups, times, eff)


def _handle_mde(payload: dict) -> dict:
    kind = _get_kind(payload)
    design = StudyDesign(_get_int(payload, "g"), _get_int(payload, "t"), _get_int(payload, "n"))
    eff = _effect_from(payload, ("rho", "eps", "alpha", "power"))
    f_star = minimal_detectable_effect(kind, design, eff)
    power_at = compute_power(kind, design, replace(eff, f=f_star)).power
    return report.mde_report(f_star, power_at, kind, design, eff)


def _curve_from_payload(payload: dict):
    kind = _get_kind(payload)
    groups = _get_int(payload, "g")
    times = _get_int(payload, "t")
    eff = _effect_from(payload, ("rho", "eps", "alpha"))
    f_values = payload.get("f_values")
    if not isinstance(f_values, list) or not f_values:
        raise _BadRequest("field 'f_values' must be a non-empty list of numbers")
    try:
        f_values = [float(v) for v in f_values]
    except (TypeError, ValueError):
        raise _BadRequest("field 'f_values' must contain numbers")
    if "n_values" in payload:
        raw = payload["n_values"]
        if not isinstance(raw, list) or not raw:
            raise _BadRequest("field 'n_values' must be a non-empty list of integers")
        n_values = [int(v) for v in raw]
    elif "n_range" in payload:
        raw = payload["n_range"]
        if not isinstance(raw, list) or len(raw) not in (2, 3):
            raise _BadRequest("field 'n_range' must be [start, stop] or [start, stop, step]")
        start, stop = int(raw[0]), int(raw[1])
        step = int(raw[2]) if len(raw) == 3 else 1
        if step <= 0 or stop < start:
            raise _BadRequest("field 'n_range' must be increasing")
        n_values = list(range(start, stop + 1, step))
    else:
        raise _BadRequest("one of 'n_values' or 'n_range' is required")
    curve = power_curve(kind, groups, times, eff, f_values, n_values)
    return curve, kind, groups, times, eff


def _flag(query: dict, key: str) -> bool:
    return query.get(key, "").lower() not in ("", "0", "false", "no")


def _handle_anova(body: str, query: dict) -> dict:
    data = parse_long_csv(body) if _flag(query, "long") else parse_wide_csv(body)
    if _flag(query, "friedman"):
        if data.n_groups != 1:
            raise _BadRequest("friedman applies to single-group data only")
        return report.friedman_report(friedman_test(data))
    if data.n_groups == 1:
        table = one_sample_rm_anova(data)
    else:
        table = multi_sample_rm_anova(data)
    return report.anova_report(table)


def _handle_simulate(payload: dict, cap: int) -> dict:
    kind = _get_kind(payload)
    design = StudyDesign(_get_int(payload, "g"), _get_int(payload, "t"), _get_int(payload, "n"))
    eff = _effect_from(payload, ("f", "rho", "alpha"))
    reps = _get_int(payload, "reps") if "reps" in payload else 10000
    seed = _get_int(payload, "seed") if "seed" in payload else 0
    spec = SimSpec(
        kind=kind,
        design=design,
        eff=eff,
        replications=min(reps, cap),
        seed=seed,
    )
    return report.mc_report(estimate_power_mc(spec), spec)


class _Handler(BaseHTTPRequestHandler):
    server_version = "rmpower"

    def log_message(self, format, *args):  # noqa: A002 - stdlib signature
        if getattr(self.server, "verbose", False):
            super().log_message(format, *args)

    # -- plumbing ---------------------------------------------------------

    def _send(self, status: int, body: bytes, content_type: str) -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _send_json(self, status: int, payload: dict) -> None:
        self._send(status, report.to_json(payload).encode("utf-8"), "application/json")

    def _send_error_body(self, status: int, kind: str, message: str) -> None:
        self._send_json(status, {"error": {"type": kind, "message": message}})

    def _read_body(self) -> bytes:
        length = int(self.headers.get("Content-Length") or 0)
        return self.rfile.read(length) if length else b""

    # -- routes -----------------------------------------------------------

    def do_GET(self):  # noqa: N802 - stdlib casing
        url = urlparse(self.path)
        if url.path == "/api/health":
            self._send_json(200, {"status": "ok"})
            return
        if url.path.startswith("/api/"):
            self._send_error_body(404, "not_found", f"no such endpoint {url.path}")
            return
        self._serve_static(url.path)

    def do_POST(self):  # noqa: N802 - stdlib casing
        url = urlparse(self.path)
        query = {k: v[-1] for k, v in parse_qs(url.query).items()}
        raw = self._read_body()
        try:
            if url.path == "/api/anova":
                payload = _handle_anova(raw.decode("utf-8", errors="replace"), query)
                self._send_json(200, payload)
                return
            try:
                body = json.loads(raw.decode("utf-8")) if raw else {}
            except json.JSONDecodeError as exc:
                raise _BadRequest(f"request body is not valid JSON: {exc}")
            if not isinstance(body, dict):
                raise _BadRequest("request body must be a JSON object")

            if url.path == "/api/power":
                self._send_json(200, _handle_power(body))
            elif url.path == "/api/nsize":
                self._send_json(200, _handle_nsize(body))
            elif url.path == "/api/mde":
                self._send_json(200, _handle_mde(body))
            elif url.path == "/api/curve":
                curve, kind, groups, times, eff = _curve_from_payload(body)
                fmt = body.get("format")
                if fmt == "svg":
                    self._send(200, curve_svg(curve).encode("utf-8"), "image/svg+xml")
                elif fmt == "csv":
                    self._send(200, curve_to_csv(curve).encode("utf-8"), "text/csv; charset=utf-8")
                else:
                    self._send_json(
                        200, report.curve_report(curve, kind, groups, times, eff)
                    )
            elif url.path == "/api/simulate":
                self._send_json(200, _handle_simulate(body, self.server.max_replications))
            else:
                self._send_error_body(404, "not_found", f"no such endpoint {url.path}")
        except _BadRequest as exc:
            self._send_error_body(400, "bad_request", str(exc))
        except UnsatisfiableError as exc:
            self._send_error_body(422, "unsatisfiable", str(exc))
        except RmPowerError as exc:
            self._send_error_body(400, type(exc).__name__, str(exc))

    # -- static UI ---------------------------------------------------------

    def _serve_static(self, path: str) -> None:
        root = self.server.ui_dir
        if root is None:
            if path in ("/", "/index.html"):
                self._send(200, _FALLBACK_PAGE.encode("utf-8"), _CONTENT_TYPES[".html"])
            else:
                self._send_error_body(404, "not_found", f"no such path {path}")
            return
        rel = path.lstrip("/") or "index.html"
        full = (root / rel).resolve()
        if not str(full).startswith(str(root.resolve()) + os.sep) and full != root.resolve():
            self._send_error_body(403, "forbidden", "path escapes the UI root")
            return
        if full.is_dir():
            full = full / "index.html"
        if not full.is_file():
            self._send_error_body(404, "not_found", f"no such path {path}")
            return
        content_type = _CONTENT_TYPES.get(full.suffix, "application/octet-stream")
        self._send(200, full.read_bytes(), content_type)


def _default_ui_dir() -> Path | None:
    env = os.environ.get(UI_ENV)
    if env:
        candidate = Path(env)
        return candidate if candidate.is_dir() else None
    candidate = Path(__file__).resolve().parents[2] / "frontend" / "dist"
    return candidate if candidate.is_dir() else None


def create_server(
    port: int | None = None,
    bind: str = "127.0.0.1",
    ui_dir: str | os.PathLike | None = None,
    max_replications: int = 100_000,
    verbose: bool = False,
) -> ThreadingHTTPServer:
    """Build (but do not start) the service; port 0 picks a free port."""
    if port is None:
        port = int(os.environ.get(PORT_ENV) or DEFAULT_PORT)
    server = ThreadingHTTPServer((bind, port), _Handler)
    server.daemon_threads = True
    server.ui_dir = Path(ui_dir) if ui_dir is not None else _default_ui_dir()
    server.max_replications = max_replications
    server.verbose = verbose
    return server


def serve_http(
    port: int | None = None,
    bind: str = "127.0.0.1",
    ui_dir: str | os.PathLike | None = None,
    max_replications: int = 100_000,
) -> None:
    """Run the service until interrupted."""
    server = create_server(port, bind, ui_dir, max_replications, verbose=True)
    host, actual_port = server.server_address[:2]
    ui_state = server.ui_dir if server.ui_dir else "built-in placeholder page"
    print(f"rmpower service listening on http://{host}:{actual_port}/ (UI: {ui_state})")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
