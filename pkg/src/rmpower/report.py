"""Machine-readable reports and their canonical JSON serialization.

Every payload carries ``schema_version`` and a ``report`` discriminator.
p-values are serialized as plain numbers; the "<0.001" style belongs to
text rendering only. ``to_json`` is canonical (sorted keys, compact
separators, repr floats), so re-parsing and re-serializing a report is
byte-identical.
"""

from __future__ import annotations

import json
import math

from .mcvalidate import MCPowerEstimate, SimSpec
from .power import (
    CurveTable,
    EffectSpec,
    PowerResult,
    SampleSizeResult,
    StudyDesign,
    TestKind,
)
from .rmanova import WITHIN_SOURCES, AnovaTable, FriedmanResult, adjusted_pvalues

SCHEMA_VERSION = 1


def to_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), allow_nan=False)


def _effect_dict(eff: EffectSpec) -> dict:
    return {
        "f": eff.f,
        "rho": eff.rho,
        "eps": eff.epsilon,
        "alpha": eff.alpha,
        "target_power": eff.target_power,
    }


def _inputs(kind: TestKind, groups: int, times: int, eff: EffectSpec, n_total=None):
    inputs = {"kind": kind.value, "g": groups, "t": times, **_effect_dict(eff)}
    if n_total is not None:
        inputs["n"] = n_total
    return inputs


def power_report(result: PowerResult, kind: TestKind, design: StudyDesign, eff: EffectSpec) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "report": "power",
        "inputs": _inputs(kind, design.groups, design.times, eff, design.n_total),
        "power": result.power,
        "crit_f": result.crit_f,
        "lambda": result.spec.lam,
        "df1": result.spec.df1,
        "df2": result.spec.df2,
    }


def nsize_report(
    result: SampleSizeResult,
    power_result: PowerResult,
    kind: TestKind,
    groups: int,
    times: int,
    eff: EffectSpec,
) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "report": "nsize",
        "inputs": _inputs(kind, groups, times, eff),
        "n_total": result.n_total,
        "n_per_group": result.n_total // groups,
        "achieved_power": result.achieved_power,
        "n_unconstrained": result.n_unconstrained,
        "power_unconstrained": result.power_unconstrained,
        "crit_f": power_result.crit_f,
        "lambda": power_result.spec.lam,
        "df1": power_result.spec.df1,
        "df2": power_result.spec.df2,
    }


def mde_report(
    f: float,
    power_at_f: float,
    kind: TestKind,
    design: StudyDesign,
    eff: EffectSpec,
) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "report": "mde",
        "inputs": _inputs(kind, design.groups, design.times, eff, design.n_total),
        "f": f,
        "power_at_f": power_at_f,
    }


def curve_report(curve: CurveTable, kind: TestKind, groups: int, times: int, eff: EffectSpec) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "report": "curve",
        "inputs": _inputs(kind, groups, times, eff),
        "points": [
            {"f": p.f, "n": p.n_total, "power": p.power} for p in curve
        ],
    }


def anova_report(table: AnovaTable) -> dict:
    rows = [
        {
            "source": row.source,
            "ss": row.ss,
            "df": row.df,
            "ms": row.ms,
            "f": row.f,
            "df_error": row.df_error,
            "p": row.p,
        }
        for row in table.rows
    ]
    sph = table.sphericity
    payload = {
        "schema_version": SCHEMA_VERSION,
        "report": "anova",
        "rows": rows,
        "sphericity": None
        if sph is None
        else {
            "mauchly_w": sph.mauchly_w,
            "chisq": sph.chisq,
            "df": sph.df,
            "p": sph.p,
            "eps_gg": sph.eps_gg,
            "eps_hf": sph.eps_hf,
            "eps_lower_bound": sph.eps_lower_bound,
        },
        "epsilon_applied": table.epsilon_applied,
        "adjusted": None,
    }
    if sph is not None:
        payload["adjusted"] = {
            name: {
                row.source: adjusted_pvalues(table, eps)[row.source].p
                for row in table.rows
                if row.source in WITHIN_SOURCES
            }
            for name, eps in (("gg", sph.eps_gg), ("hf", sph.eps_hf))
        }
    return payload


def friedman_report(result: FriedmanResult) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "report": "friedman",
        "statistic": result.statistic,
        "df": result.df,
        "p": result.p,
    }


def mc_report(estimate: MCPowerEstimate, spec: SimSpec) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "report": "simulate",
        "inputs": _inputs(
            spec.kind, spec.design.groups, spec.design.times, spec.eff, spec.design.n_total
        )
        | {"replications": spec.replications, "seed": spec.seed},
        "rejection_rate": estimate.rejection_rate,
        "std_error": estimate.std_error,
        "analytic_power": estimate.analytic_power,
        # JSON has no infinity; a saturated estimate (rate of exactly 0 or 1
        # away from the analytic value) reports a null discrepancy
        "z_discrepancy": estimate.z_discrepancy
        if math.isfinite(estimate.z_discrepancy)
        else None,
        "replications": estimate.replications,
    }
