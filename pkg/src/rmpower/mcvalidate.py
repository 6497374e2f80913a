"""Monte Carlo oracle for the analytic power engine.

Simulates repeated-measures data under the additive model with compound
symmetry (common variance 1, common correlation rho) and estimates power as
the fraction of replicates whose ANOVA p-value falls below alpha.

Fixed-effect calibration: the mean pattern is a centered linear ramp across
the relevant factor levels, scaled so the root-mean-square of the effect
vector equals the requested f. Any pattern with that RMS realizes the same
noncentrality, and the ramp is canonical and easy to test. Cell variance is
fixed at 1 (F ratios are scale invariant).

Replicates draw from independent streams keyed by (seed, replicate_index),
so results are bit-reproducible and independent of evaluation order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidDesignError
from .power import EffectSpec, StudyDesign, TestKind, compute_power
from .rmanova import (
    SOURCE_GROUP,
    SOURCE_INTERACTION,
    SOURCE_TIME,
    GroupData,
    RMDataset,
    multi_sample_rm_anova,
    one_sample_rm_anova,
    validate_dataset,
)

_KIND_TO_SOURCE = {
    TestKind.BETWEEN: SOURCE_GROUP,
    TestKind.WITHIN: SOURCE_TIME,
    TestKind.INTERACTION: SOURCE_INTERACTION,
}


@dataclass(frozen=True)
class SimSpec:
    kind: TestKind
    design: StudyDesign
    eff: EffectSpec
    replications: int = 10000
    seed: int = 0

    def __post_init__(self):
        if self.replications < 100:
            raise DomainError(
                f"replications must be >= 100, got {self.replications}"
            )
        if self.design.n_total % self.design.groups != 0:
            raise InvalidDesignError(
                "simulation assumes equal allocation; n_total "
                f"{self.design.n_total} is not a multiple of groups "
                f"{self.design.groups}"
            )


@dataclass(frozen=True)
class MCPowerEstimate:
    rejection_rate: float
    std_error: float
    analytic_power: float
    z_discrepancy: float
    replications: int


def _centered_ramp(levels: int) -> np.ndarray:
    return np.arange(levels, dtype=float) - 0.5 * (levels - 1)


def _scaled(ramp: np.ndarray, f: float) -> np.ndarray:
    rms = math.sqrt(float((ramp**2).mean()))
    if rms == 0.0:
        raise InvalidDesignError("effect pattern needs at least 2 levels")
    return ramp * (f / rms)


def mean_pattern(kind: TestKind, groups: int, times: int, f: float) -> np.ndarray:
    """(groups, times) matrix of cell means realizing effect size f for the
    chosen test kind; all zeros when f = 0."""
    pattern = np.zeros((groups, times))
    if f == 0.0:
        return pattern
    if kind is TestKind.BETWEEN:
        gamma = _scaled(_centered_ramp(groups), f)
        pattern += gamma[:, None]
    elif kind is TestKind.WITHIN:
        tau = _scaled(_centered_ramp(times), f)
        pattern += tau[None, :]
    elif kind is TestKind.INTERACTION:
        outer = np.outer(_centered_ramp(groups), _centered_ramp(times))
        pattern += _scaled(outer, f)
    else:  # pragma: no cover
        raise DomainError(f"unknown test kind {kind!r}")
    return pattern


def simulate_dataset(spec: SimSpec, replicate_index: int) -> RMDataset:
    """One simulated dataset, fully determined by (spec.seed,
    replicate_index).

    Compound symmetry is sampled by splitting a subject's draw into its
    mean direction and the centered remainder:

        y = mu + sqrt((1+(t-1)rho)/t) * z0 * 1 + sqrt(1-rho) * (z - zbar)

    which has covariance (1-rho) I + rho J for every admissible rho,
    including the negative range where a shared subject intercept does
    not exist.
    """
    eff = spec.eff
    eff.check_against_times(spec.design.times)
    g = spec.design.groups
    t = spec.design.times
    n_per = spec.design.n_total // g
    pattern = mean_pattern(spec.kind, g, t, eff.f)

    scale_mean = math.sqrt((1.0 + (t - 1) * eff.rho) / t)
    scale_dev = math.sqrt(1.0 - eff.rho)

    rng = np.random.default_rng((spec.seed, replicate_index))
    blocks = []
    for k in range(g):
        z0 = rng.standard_normal(n_per)
        z = rng.standard_normal((n_per, t))
        rows = (
            pattern[k][None, :]
            + scale_mean * z0[:, None]
            + scale_dev * (z - z.mean(axis=1, keepdims=True))
        )
        subjects = tuple(f"s{i + 1}" for i in range(n_per))
        blocks.append(GroupData(f"g{k + 1}", subjects, rows))
    raw = RMDataset(groups=tuple(blocks), time_labels=tuple(f"t{j + 1}" for j in range(t)))
    return validate_dataset(raw)


def estimate_power_mc(spec: SimSpec) -> MCPowerEstimate:
    """Empirical power over spec.replications simulated datasets, with the
    discrepancy against the analytic value in standard-error units."""
    analytic = compute_power(spec.kind, spec.design, spec.eff).power
    source = _KIND_TO_SOURCE[spec.kind]
    alpha = spec.eff.alpha

    rejections = 0
    for index in range(spec.replications):
        data = simulate_dataset(spec, index)
        if spec.design.groups > 1:
            table = multi_sample_rm_anova(data, diagnostics=False)
        else:
            table = one_sample_rm_anova(data, diagnostics=False)
        if table[source].p < alpha:
            rejections += 1

    rate = rejections / spec.replications
    std_error = math.sqrt(rate * (1.0 - rate) / spec.replications)
    if std_error > 0:
        z = (rate - analytic) / std_error
    elif rate == analytic:
        z = 0.0
    else:
        z = math.copysign(math.inf, rate - analytic)
    return MCPowerEstimate(
        rejection_rate=rate,
        std_error=std_error,
        analytic_power=analytic,
        z_discrepancy=z,
        replications=spec.replications,
    )
