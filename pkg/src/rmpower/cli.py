"""Command-line interface.

Subcommands: ``power`` (power at a given N), ``nsize`` (a-priori sample
size), ``mde`` (minimal detectable effect), ``curve`` (power-curve CSV and
optional SVG), ``anova`` (one- or multi-group repeated-measures table from
a CSV file), ``simulate`` (Monte Carlo check of the analytic power), and
``serve`` (local HTTP API + what-if UI).

Exit codes: 0 success, 2 usage error, 1 computation error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from . import report
from .csvio import curve_to_csv, parse_long_csv, parse_wide_csv
from .errors import RmPowerError
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
from .rmanova import (
    AnovaTable,
    adjusted_pvalues,
    friedman_test,
    multi_sample_rm_anova,
    one_sample_rm_anova,
)
from .svgplot import curve_svg


def fmt_stat(x: float) -> str:
    """Statistics (F, power, epsilon, ...) rendered to 4 decimals."""
    return f"{x:.4f}"


def fmt_p(p: float) -> str:
    """p-values to 3 decimals with the conventional '<0.001' floor; a
    literal 0.000 is never printed."""
    if p < 0.001:
        return "<0.001"
    return f"{p:.3f}"


def _fmt_df(df: float) -> str:
    return f"{df:g}"


def _effect_from_args(args: argparse.Namespace) -> EffectSpec:
    overrides = {}
    for attr, field in (
        ("f", "f"),
        ("rho", "rho"),
        ("eps", "epsilon"),
        ("alpha", "alpha"),
        ("power", "target_power"),
    ):
        value = getattr(args, attr, None)
        if value is not None:
            overrides[field] = value
    return EffectSpec(**overrides)


def _add_design_args(parser: argparse.ArgumentParser, with_n: bool) -> None:
    parser.add_argument(
        "--kind",
        required=True,
        choices=[k.value for k in TestKind],
        help="which repeated-measures test",
    )
    parser.add_argument("--groups", required=True, type=int, help="number of groups g")
    parser.add_argument("--times", required=True, type=int, help="number of time points t")
    if with_n:
        parser.add_argument("--n", required=True, type=int, help="total sample size N")


def _add_effect_args(parser: argparse.ArgumentParser, with_f=True, with_power=False) -> None:
    if with_f:
        parser.add_argument("--f", type=float, help="effect size f (default 0.25)")
    parser.add_argument("--rho", type=float, help="correlation among measures (default 0.5)")
    parser.add_argument("--eps", type=float, help="nonsphericity correction (default 1)")
    parser.add_argument("--alpha", type=float, help="significance level (default 0.05)")
    if with_power:
        parser.add_argument("--power", type=float, help="target power (default 0.8)")


def _add_output_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="emit the JSON report")
    parser.add_argument("--out", help="write output to this path instead of stdout")


def _deliver(text: str, payload: dict, args: argparse.Namespace) -> int:
    body = report.to_json(payload) if args.json else text
    if args.out:
        Path(args.out).write_text(body + "\n", encoding="utf-8")
    else:
        print(body)
    return 0


def _cmd_power(args: argparse.Namespace) -> int:
    kind = TestKind.parse(args.kind)
    eff = _effect_from_args(args)
    design = StudyDesign(args.groups, args.times, args.n)
    result = compute_power(kind, design, eff)
    text = "\n".join(
        [
            f"power = {fmt_stat(result.power)}",
            f"critical F = {fmt_stat(result.crit_f)} "
            f"(df {_fmt_df(result.spec.df1)}, {_fmt_df(result.spec.df2)})",
            f"lambda = {fmt_stat(result.spec.lam)}",
        ]
    )
    return _deliver(text, report.power_report(result, kind, design, eff), args)


def _cmd_nsize(args: argparse.Namespace) -> int:
    kind = TestKind.parse(args.kind)
    eff = _effect_from_args(args)
    result = required_sample_size(kind, args.groups, args.times, eff)
    achieved = compute_power(
        kind, StudyDesign(args.groups, args.times, result.n_total), eff
    )
    lines = [
        f"N = {result.n_total}",
        f"n per group = {result.n_total // args.groups}",
        f"achieved power = {fmt_stat(result.achieved_power)}",
    ]
    if result.n_unconstrained != result.n_total:
        lines.append(
            f"note: dropping the equal-allocation step, the smallest integer "
            f"N = {result.n_unconstrained} "
            f"(power {fmt_stat(result.power_unconstrained)})"
        )
    payload = report.nsize_report(result, achieved, kind, args.groups, args.times, eff)
    return _deliver("\n".join(lines), payload, args)


def _cmd_mde(args: argparse.Namespace) -> int:
    kind = TestKind.parse(args.kind)
    eff = _effect_from_args(args)
    design = StudyDesign(args.groups, args.times, args.n)
    f_star = minimal_detectable_effect(kind, design, eff)
    power_at = compute_power(kind, design, replace(eff, f=f_star)).power
    text = "\n".join(
        [f"f = {fmt_stat(f_star)}", f"power at f = {fmt_stat(power_at)}"]
    )
    return _deliver(text, report.mde_report(f_star, power_at, kind, design, eff), args)


def _parse_f_values(raw: str) -> list[float]:
    try:
        values = [float(part) for part in raw.split(",") if part.strip()]
    except ValueError:
        raise RmPowerError(f"--f-values must be comma-separated numbers, got {raw!r}")
    if not values:
        raise RmPowerError("--f-values is empty")
    return values


def _parse_n_range(raw: str) -> list[int]:
    parts = raw.split(":")
    try:
        numbers = [int(part) for part in parts]
    except ValueError:
        raise RmPowerError(f"--n-range must be start:stop[:step], got {raw!r}")
    if len(numbers) == 2:
        start, stop, step = numbers[0], numbers[1], 1
    elif len(numbers) == 3:
        start, stop, step = numbers
    else:
        raise RmPowerError(f"--n-range must be start:stop[:step], got {raw!r}")
    if step <= 0 or stop < start:
        raise RmPowerError(f"--n-range must be increasing, got {raw!r}")
    return list(range(start, stop + 1, step))


def _cmd_curve(args: argparse.Namespace) -> int:
    kind = TestKind.parse(args.kind)
    eff = _effect_from_args(args)
    f_values = _parse_f_values(args.f_values)
    n_values = _parse_n_range(args.n_range)
    curve = power_curve(kind, args.groups, args.times, eff, f_values, n_values)

    base = args.out or "power_curve"
    if base.endswith((".csv", ".svg")):
        base = base[:-4]
    csv_path = Path(base + ".csv")
    csv_path.write_text(curve_to_csv(curve), encoding="utf-8")
    written = [str(csv_path)]
    if args.svg:
        svg_path = Path(base + ".svg")
        svg_path.write_text(curve_svg(curve), encoding="utf-8")
        written.append(str(svg_path))

    payload = report.curve_report(curve, kind, args.groups, args.times, eff)
    if args.json:
        print(report.to_json(payload))
    else:
        for path in written:
            print(f"wrote {path}")
    return 0


def render_anova_text(table: AnovaTable) -> str:
    header = ("Source", "SS", "df", "MS", "F", "p")
    body = []
    for row in table.rows:
        body.append(
            (
                row.source,
                fmt_stat(row.ss),
                _fmt_df(row.df),
                fmt_stat(row.ms),
                "" if row.f is None else fmt_stat(row.f),
                "" if row.p is None else fmt_p(row.p),
            )
        )
    widths = [
        max(len(header[i]), *(len(line[i]) for line in body)) for i in range(6)
    ]
    lines = [
        "  ".join(
            cell.ljust(widths[i]) if i == 0 else cell.rjust(widths[i])
            for i, cell in enumerate(header)
        )
    ]
    for line in body:
        lines.append(
            "  ".join(
                cell.ljust(widths[i]) if i == 0 else cell.rjust(widths[i])
                for i, cell in enumerate(line)
            )
        )
    sph = table.sphericity
    if sph is not None:
        lines.append(
            f"sphericity: Mauchly W = {fmt_stat(sph.mauchly_w)}, "
            f"chi2 = {fmt_stat(sph.chisq)}, df = {sph.df}, p = {fmt_p(sph.p)}"
        )
        lines.append(
            f"epsilon: GG = {fmt_stat(sph.eps_gg)}, HF = {fmt_stat(sph.eps_hf)} "
            f"(lower bound {sph.eps_lower_bound:g})"
        )
    if table.epsilon_applied is not None:
        lines.append(
            f"p-values adjusted with epsilon = {fmt_stat(table.epsilon_applied)}"
        )
    return "\n".join(lines)


def _cmd_anova(args: argparse.Namespace) -> int:
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as exc:
        raise RmPowerError(f"cannot read {args.file}: {exc}")
    data = parse_long_csv(text) if args.long else parse_wide_csv(text)

    if args.friedman:
        if data.n_groups != 1:
            raise RmPowerError("--friedman applies to single-group data only")
        result = friedman_test(data)
        text_out = (
            f"Friedman chi-square = {fmt_stat(result.statistic)}, "
            f"df = {result.df}, p = {fmt_p(result.p)}"
        )
        return _deliver(text_out, report.friedman_report(result), args)

    if data.n_groups == 1:
        table = one_sample_rm_anova(data)
    else:
        table = multi_sample_rm_anova(data)
    if args.gg or args.hf:
        if table.sphericity is None:
            raise RmPowerError(
                "sphericity diagnostics unavailable (t = 2 or singular "
                "covariance); cannot apply an epsilon adjustment"
            )
        eps = table.sphericity.eps_gg if args.gg else table.sphericity.eps_hf
        table = adjusted_pvalues(table, eps)
    return _deliver(render_anova_text(table), report.anova_report(table), args)


def _cmd_simulate(args: argparse.Namespace) -> int:
    kind = TestKind.parse(args.kind)
    eff = _effect_from_args(args)
    spec = SimSpec(
        kind=kind,
        design=StudyDesign(args.groups, args.times, args.n),
        eff=eff,
        replications=args.reps,
        seed=args.seed,
    )
    estimate = estimate_power_mc(spec)
    text = "\n".join(
        [
            f"rejection rate = {fmt_stat(estimate.rejection_rate)} "
            f"(SE {fmt_stat(estimate.std_error)})",
            f"analytic power = {fmt_stat(estimate.analytic_power)}",
            f"z discrepancy = {estimate.z_discrepancy:.2f}",
            f"replications = {estimate.replications}, seed = {args.seed}",
        ]
    )
    return _deliver(text, report.mc_report(estimate, spec), args)


def _cmd_serve(args: argparse.Namespace) -> int:
    from .server import serve_http

    serve_http(
        port=args.port,
        bind=args.bind,
        ui_dir=args.ui_dir,
        max_replications=args.max_reps,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rmpower",
        description=(
            "Power analysis, sample-size solving, and repeated-measures "
            "ANOVA for longitudinal designs."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("power", help="power of a test at a given total N")
    _add_design_args(p, with_n=True)
    _add_effect_args(p)
    _add_output_args(p)
    p.set_defaults(func=_cmd_power)

    p = sub.add_parser("nsize", help="a-priori required sample size")
    _add_design_args(p, with_n=False)
    _add_effect_args(p, with_power=True)
    _add_output_args(p)
    p.set_defaults(func=_cmd_nsize)

    p = sub.add_parser("mde", help="minimal detectable effect at a fixed N")
    _add_design_args(p, with_n=True)
    _add_effect_args(p, with_f=False, with_power=True)
    _add_output_args(p)
    p.set_defaults(func=_cmd_mde)

    p = sub.add_parser("curve", help="power curves over f and N grids")
    _add_design_args(p, with_n=False)
    _add_effect_args(p, with_f=False)
    p.add_argument(
        "--f-values",
        default="0.1,0.25,0.4",
        help="comma-separated effect sizes (default 0.1,0.25,0.4)",
    )
    p.add_argument(
        "--n-range",
        required=True,
        help="start:stop[:step] grid of total sample sizes",
    )
    p.add_argument("--svg", action="store_true", help="also write an SVG plot")
    _add_output_args(p)
    p.set_defaults(func=_cmd_curve)

    p = sub.add_parser("anova", help="repeated-measures ANOVA from a CSV file")
    p.add_argument("file", help="wide CSV: group,subject,<time labels>")
    p.add_argument("--long", action="store_true", help="input is long format")
    adjust = p.add_mutually_exclusive_group()
    adjust.add_argument("--gg", action="store_true", help="Greenhouse-Geisser adjusted p-values")
    adjust.add_argument("--hf", action="store_true", help="Huynh-Feldt adjusted p-values")
    p.add_argument("--friedman", action="store_true", help="Friedman rank test (one group)")
    _add_output_args(p)
    p.set_defaults(func=_cmd_anova)

    p = sub.add_parser("simulate", help="Monte Carlo check of the analytic power")
    _add_design_args(p, with_n=True)
    _add_effect_args(p)
    p.add_argument("--reps", type=int, default=10000, help="replications (default 10000)")
    p.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    _add_output_args(p)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("serve", help="run the local HTTP API and UI")
    p.add_argument("--port", type=int, default=None, help="port (default $RMPOWER_PORT or 8707)")
    p.add_argument("--bind", default="127.0.0.1", help="bind address (default loopback)")
    p.add_argument("--ui-dir", default=None, help="directory of the static UI bundle")
    p.add_argument(
        "--max-reps",
        type=int,
        default=100000,
        help="cap on simulate replications per request",
    )
    p.set_defaults(func=_cmd_serve)

    return parser


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except RmPowerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
