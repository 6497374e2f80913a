"""Analytic power, sample-size, and sensitivity solvers for repeated-measures
F tests.

Power is evaluated as

    power = 1 - NCF(crit; df1, df2, lam),   crit = F^{-1}(1 - alpha; df1, df2)

with the noncentrality and degrees of freedom per test kind:

    between groups:  lam = f^2 t N / (1 + (t-1) rho),   df1 = g-1,
                     df2 = N-g
    within (time):   lam = f^2 t N eps / (1 - rho),     df1 = (t-1) eps,
                     df2 = (N-g)(t-1) eps
    interaction:     lam = f^2 t N eps / (1 - rho),     df1 = (g-1)(t-1) eps,
                     df2 = (N-g)(t-1) eps

The effect size f is Cohen's f (between/within SD ratio); eps is the
nonsphericity correction, ignored (forced to 1) for the between-groups test,
whose F statistic does not touch the within-subject contrasts.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass, replace

from .distributions import f_quantile, noncentral_f_cdf
from .errors import DomainError, InvalidDesignError, UnsatisfiableError

#: Solver caps; hitting one raises UnsatisfiableError rather than looping.
MAX_SAMPLE_SIZE = 1_000_000
MAX_EFFECT_SIZE = 10.0


class TestKind(enum.Enum):
    """The three repeated-measures hypotheses."""

    BETWEEN = "between"
    WITHIN = "within"
    INTERACTION = "interaction"

    @classmethod
    def parse(cls, name: str) -> "TestKind":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise DomainError(
                f"unknown test kind {name!r}; expected one of "
                f"{', '.join(k.value for k in cls)}"
            ) from None


@dataclass(frozen=True)
class StudyDesign:
    """g groups, t repeated measures, N subjects in total (equal allocation
    N/g per group is assumed for planning)."""

    groups: int
    times: int
    n_total: int

    def __post_init__(self):
        if self.groups < 1:
            raise InvalidDesignError(f"groups must be >= 1, got {self.groups}")
        if self.times < 2:
            raise InvalidDesignError(f"times must be >= 2, got {self.times}")
        if self.n_total < 2 * self.groups:
            raise InvalidDesignError(
                f"n_total must allow at least 2 subjects per group "
                f"(>= {2 * self.groups}), got {self.n_total}"
            )


@dataclass(frozen=True)
class EffectSpec:
    """Effect size and test parameters.

    f             Cohen's f, the between/within SD ratio (0.1 / 0.25 / 0.4
                  for small / medium / large).
    rho           correlation among the repeated measures; must satisfy
                  -1/(t-1) < rho < 1 for positive definiteness.
    epsilon       nonsphericity correction in [1/(t-1), 1]; 1 means
                  sphericity holds.
    alpha         significance level.
    target_power  desired 1 - beta for the solvers.
    """

    f: float = 0.25
    rho: float = 0.5
    epsilon: float = 1.0
    alpha: float = 0.05
    target_power: float = 0.8

    def __post_init__(self):
        if self.f < 0:
            raise DomainError(f"effect size f must be >= 0, got {self.f}")
        if not -1.0 < self.rho < 1.0:
            raise DomainError(f"rho must be in (-1, 1), got {self.rho}")
        if not 0.0 < self.epsilon <= 1.0:
            raise DomainError(f"epsilon must be in (0, 1], got {self.epsilon}")
        if not 0.0 < self.alpha < 1.0:
            raise DomainError(f"alpha must be in (0, 1), got {self.alpha}")
        if not 0.0 < self.target_power < 1.0:
            raise DomainError(
                f"target_power must be in (0, 1), got {self.target_power}"
            )

    def check_against_times(self, times: int) -> None:
        """Enforce the t-dependent lower bounds on rho and epsilon."""
        lower = 1.0 / (times - 1)
        if self.rho <= -lower:
            raise DomainError(
                f"rho must exceed -1/(t-1) = {-lower:.6g} for t={times}, "
                f"got {self.rho}"
            )
        if self.epsilon < lower - 1e-12:
            raise DomainError(
                f"epsilon must be >= 1/(t-1) = {lower:.6g} for t={times}, "
                f"got {self.epsilon}"
            )


@dataclass(frozen=True)
class NoncentralitySpec:
    """Noncentrality and the (possibly non-integer) df pair of a test."""

    lam: float
    df1: float
    df2: float


@dataclass(frozen=True)
class PowerResult:
    power: float
    crit_f: float
    spec: NoncentralitySpec


@dataclass(frozen=True)
class SampleSizeResult:
    """Primary answer ``n_total`` is the smallest multiple of g reaching the
    target power; ``n_unconstrained`` is the smallest integer N doing so,
    which can be smaller when the power step between multiples straddles
    the target."""

    n_total: int
    achieved_power: float
    n_unconstrained: int
    power_unconstrained: float


@dataclass(frozen=True)
class CurvePoint:
    f: float
    n_total: int
    power: float


@dataclass(frozen=True)
class CurveTable:
    points: tuple[CurvePoint, ...]

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)


def f_from_eta_squared(eta_squared: float) -> float:
    """Convert a (partial) eta-squared into Cohen's f."""
    if not 0.0 <= eta_squared < 1.0:
        raise DomainError(f"eta_squared must be in [0, 1), got {eta_squared}")
    return math.sqrt(eta_squared / (1.0 - eta_squared))


def noncentrality(
    kind: TestKind, design: StudyDesign, eff: EffectSpec
) -> NoncentralitySpec:
    """Noncentrality parameter and df pair for one test kind."""
    eff.check_against_times(design.times)
    g, t, n = design.groups, design.times, design.n_total
    f2 = eff.f * eff.f

    if kind is TestKind.BETWEEN:
        # eps does not enter: the group test averages over time points
        lam = f2 * t * n / (1.0 + (t - 1) * eff.rho)
        df1 = float(g - 1)
        df2 = float(n - g)
    elif kind is TestKind.WITHIN:
        lam = f2 * t * n * eff.epsilon / (1.0 - eff.rho)
        df1 = (t - 1) * eff.epsilon
        df2 = (n - g) * (t - 1) * eff.epsilon
    elif kind is TestKind.INTERACTION:
        lam = f2 * t * n * eff.epsilon / (1.0 - eff.rho)
        df1 = (g - 1) * (t - 1) * eff.epsilon
        df2 = (n - g) * (t - 1) * eff.epsilon
    else:  # pragma: no cover
        raise DomainError(f"unknown test kind {kind!r}")

    if df1 <= 0:
        raise InvalidDesignError(
            f"{kind.value} test needs df1 > 0; got df1={df1} "
            f"(g={g}, t={t}, eps={eff.epsilon})"
        )
    if df2 <= 0:
        raise InvalidDesignError(
            f"{kind.value} test needs df2 > 0; got df2={df2} (N={n}, g={g})"
        )
    return NoncentralitySpec(lam=lam, df1=df1, df2=df2)


def compute_power(
    kind: TestKind, design: StudyDesign, eff: EffectSpec
) -> PowerResult:
    """Analytic power of the chosen test at the given design and effect."""
    spec = noncentrality(kind, design, eff)
    crit = f_quantile(1.0 - eff.alpha, spec.df1, spec.df2)
    power = 1.0 - noncentral_f_cdf(crit, spec.df1, spec.df2, spec.lam)
    return PowerResult(power=power, crit_f=crit, spec=spec)


def _power_at_n(kind: TestKind, groups: int, times: int, eff: EffectSpec, n: int) -> float:
    return compute_power(kind, StudyDesign(groups, times, n), eff).power


def _smallest_n(
    kind: TestKind, groups: int, times: int, eff: EffectSpec, step: int, cap: int
) -> tuple[int, float]:
    """Smallest N on the grid {2g, 2g+step, ...} whose power reaches the
    target. Power is increasing in N, so a geometric bracket followed by
    bisection on the grid returns the same N as a linear scan."""
    target = eff.target_power
    start = 2 * groups
    if start > cap:
        raise UnsatisfiableError(
            f"minimum feasible N={start} already exceeds the cap {cap}"
        )
    # largest grid point (start + k*step) not beyond the cap
    cap_grid = start + ((cap - start) // step) * step
    p_lo = _power_at_n(kind, groups, times, eff, start)
    if p_lo >= target:
        return start, p_lo

    lo = start
    while True:
        # next grid point at or beyond 2*lo
        hi = min(cap_grid, start + ((2 * lo - start + step - 1) // step) * step)
        if _power_at_n(kind, groups, times, eff, hi) >= target:
            break
        if hi >= cap_grid:
            raise UnsatisfiableError(
                f"target power {target} not reached by N={cap} for the "
                f"{kind.value} test (f={eff.f}, alpha={eff.alpha})"
            )
        lo = hi

    # invariant: power(lo) < target <= power(hi); both on the step grid
    while hi - lo > step:
        mid = lo + ((hi - lo) // (2 * step)) * step
        if _power_at_n(kind, groups, times, eff, mid) >= target:
            hi = mid
        else:
            lo = mid
    return hi, _power_at_n(kind, groups, times, eff, hi)


def required_sample_size(
    kind: TestKind,
    groups: int,
    times: int,
    eff: EffectSpec,
    cap: int = MAX_SAMPLE_SIZE,
) -> SampleSizeResult:
    """A-priori sample size: smallest total N (multiple of g, equal
    allocation) with power >= target_power; also reports the smallest
    unconstrained-integer N for comparison."""
    if eff.f <= 0:
        raise DomainError("required_sample_size needs a positive effect size f")
    if eff.target_power <= eff.alpha:
        raise DomainError(
            f"target_power ({eff.target_power}) must exceed alpha ({eff.alpha})"
        )
    n_step, p_step = _smallest_n(kind, groups, times, eff, groups, cap)
    n_any, p_any = _smallest_n(kind, groups, times, eff, 1, cap)
    return SampleSizeResult(
        n_total=n_step,
        achieved_power=p_step,
        n_unconstrained=n_any,
        power_unconstrained=p_any,
    )


def minimal_detectable_effect(
    kind: TestKind,
    design: StudyDesign,
    eff: EffectSpec,
    f_max: float = MAX_EFFECT_SIZE,
    tol: float = 1e-8,
) -> float:
    """Sensitivity analysis: the effect size f at which the fixed design
    reaches target_power, found by bisection (power is strictly increasing
    in f, so the root is unique). ``eff.f`` is ignored."""
    target = eff.target_power
    if target <= eff.alpha:
        raise DomainError(
            f"target_power ({target}) must exceed alpha ({eff.alpha})"
        )
    hi_power = compute_power(kind, design, replace(eff, f=f_max)).power
    if hi_power < target:
        raise UnsatisfiableError(
            f"power at f={f_max} is {hi_power:.4f} < target {target}; "
            f"the design cannot reach the requested power"
        )
    lo, hi = 0.0, f_max
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        p = compute_power(kind, design, replace(eff, f=mid)).power
        if abs(p - target) <= tol:
            return mid
        if p < target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def power_curve(
    kind: TestKind,
    groups: int,
    times: int,
    eff: EffectSpec,
    f_values: list[float],
    n_values: list[int],
) -> CurveTable:
    """Power over a grid of effect sizes and sample sizes, one point per
    (f, N) combination. Infeasible rows are skipped with a warning rather
    than failing the whole grid."""
    if not f_values or not n_values:
        raise DomainError("power_curve needs at least one f value and one N value")
    points = []
    for f in f_values:
        row_eff = replace(eff, f=f)
        for n in n_values:
            try:
                result = compute_power(kind, StudyDesign(groups, times, n), row_eff)
            except (InvalidDesignError, DomainError) as exc:
                warnings.warn(f"skipping curve point f={f}, N={n}: {exc}")
                continue
            points.append(CurvePoint(f=f, n_total=n, power=result.power))
    return CurveTable(points=tuple(points))
