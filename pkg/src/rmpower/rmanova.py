"""Repeated-measures ANOVA on observed data.

Covers the one-group test (time effect against the subject-by-time
residual), the three multi-group tests (group, time, group-by-time
interaction), the full fixed/random effects decomposition, sphericity
diagnostics (Mauchly's W, Greenhouse-Geisser and Huynh-Feldt epsilons),
epsilon-adjusted p-values, and the Friedman rank test as the nonparametric
fallback for one group.

Layout convention: a dataset is a list of group blocks, each holding a
subjects-by-times matrix of measurements; every subject row is complete.
Groups may be unbalanced for analysis (planning in :mod:`rmpower.power`
assumes equal allocation).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterable, Mapping, Sequence

import numpy as np

from .distributions import chisq_cdf, f_cdf
from .errors import (
    DatasetError,
    DegenerateDataError,
    DomainError,
    SingularCovarianceError,
    ZeroVarianceError,
)

SOURCE_GROUP = "Group"
SOURCE_SUBJECT = "Subject(Group)"
SOURCE_SUBJECT_ONE = "Subject"
SOURCE_TIME = "Time"
SOURCE_INTERACTION = "Group:Time"
SOURCE_ERROR = "Error"

#: Rows whose p-values are recomputed under an epsilon correction.
WITHIN_SOURCES = (SOURCE_TIME, SOURCE_INTERACTION)


@dataclass(frozen=True)
class GroupData:
    """One group block: label, subject identifiers, and an (n_subjects,
    n_times) measurement matrix."""

    label: str
    subjects: tuple[str, ...]
    values: np.ndarray


@dataclass(frozen=True)
class RMDataset:
    groups: tuple[GroupData, ...]
    time_labels: tuple[str, ...]

    @property
    def n_groups(self) -> int:
        return len(self.groups)

    @property
    def n_times(self) -> int:
        return len(self.time_labels)

    @property
    def group_sizes(self) -> tuple[int, ...]:
        return tuple(block.values.shape[0] for block in self.groups)

    @property
    def n_total(self) -> int:
        return sum(self.group_sizes)

    @property
    def is_balanced(self) -> bool:
        sizes = self.group_sizes
        return all(size == sizes[0] for size in sizes)


@dataclass(frozen=True)
class AnovaRow:
    source: str
    ss: float
    df: float
    ms: float
    f: float | None = None
    df_error: float | None = None
    p: float | None = None


@dataclass(frozen=True)
class SphericityReport:
    """Mauchly's test plus the two epsilon estimators.

    For t = 2 there is a single contrast, sphericity holds trivially and
    the report degenerates to W = 1, p = 1 with chi-square df = 0.
    """

    mauchly_w: float
    chisq: float
    df: int
    p: float
    eps_gg: float
    eps_hf: float
    eps_lower_bound: float


@dataclass(frozen=True)
class AnovaTable:
    rows: tuple[AnovaRow, ...]
    sphericity: SphericityReport | None = None
    epsilon_applied: float | None = None

    def __getitem__(self, source: str) -> AnovaRow:
        for row in self.rows:
            if row.source == source:
                return row
        raise KeyError(source)

    def __contains__(self, source: str) -> bool:
        return any(row.source == source for row in self.rows)

    @property
    def sources(self) -> tuple[str, ...]:
        return tuple(row.source for row in self.rows)


@dataclass(frozen=True)
class EffectsDecomposition:
    """Plug-in cell-mean estimates of the additive model: every observation
    reconstructs exactly as grand_mean + subject + time + group +
    interaction + residual."""

    grand_mean: float
    time_effects: np.ndarray
    group_effects: np.ndarray
    interaction_effects: np.ndarray
    subject_effects: tuple[np.ndarray, ...]
    residuals: tuple[np.ndarray, ...]


@dataclass(frozen=True)
class FriedmanResult:
    statistic: float
    df: int
    p: float


# ---------------------------------------------------------------------------
# dataset construction and validation


def validate_dataset(raw: RMDataset) -> RMDataset:
    """Check the structural invariants and return a normalized dataset
    (float64 matrices, explicit time labels).

    Raises DatasetError naming the offending group / subject / column for:
    ragged rows, missing (non-finite) cells, fewer than 2 subjects in a
    group, duplicated subject ids, or group blocks disagreeing on t.
    """
    if not raw.groups:
        raise DatasetError("dataset has no groups")

    t_expected: int | None = len(raw.time_labels) if raw.time_labels else None
    blocks: list[GroupData] = []
    for block in raw.groups:
        rows = [np.asarray(row, dtype=float).ravel() for row in block.values]
        if len(rows) < 2:
            raise DatasetError(
                f"group {block.label!r} has {len(rows)} subject(s); at least 2 required"
            )
        widths = {row.shape[0] for row in rows}
        if len(widths) > 1:
            for subject, row in zip(block.subjects, rows):
                if row.shape[0] != rows[0].shape[0]:
                    raise DatasetError(
                        f"ragged rows in group {block.label!r}: subject "
                        f"{subject!r} has {row.shape[0]} values, expected "
                        f"{rows[0].shape[0]}"
                    )
        t_block = rows[0].shape[0]
        if t_block < 2:
            raise DatasetError(
                f"group {block.label!r} has {t_block} time point(s); at least 2 required"
            )
        if t_expected is None:
            t_expected = t_block
        elif t_block != t_expected:
            raise DatasetError(
                f"group {block.label!r} has {t_block} time points, "
                f"expected {t_expected}"
            )
        if len(block.subjects) != len(rows):
            raise DatasetError(
                f"group {block.label!r} has {len(block.subjects)} subject ids "
                f"for {len(rows)} rows"
            )
        seen: set[str] = set()
        for subject in block.subjects:
            if subject in seen:
                raise DatasetError(
                    f"duplicate subject {subject!r} in group {block.label!r}"
                )
            seen.add(subject)
        matrix = np.vstack(rows)
        bad = np.argwhere(~np.isfinite(matrix))
        if bad.size:
            i, j = bad[0]
            raise DatasetError(
                f"missing or non-numeric cell in group {block.label!r}, "
                f"subject {block.subjects[i]!r}, column {j + 1}"
            )
        matrix.setflags(write=False)
        blocks.append(GroupData(block.label, tuple(block.subjects), matrix))

    labels = tuple(raw.time_labels) if raw.time_labels else tuple(
        f"t{j + 1}" for j in range(t_expected)
    )
    if len(labels) != t_expected:
        raise DatasetError(
            f"{len(labels)} time labels for {t_expected} time points"
        )
    return RMDataset(groups=tuple(blocks), time_labels=labels)


def make_dataset(
    blocks: Mapping[str, object] | Sequence[tuple[str, object]],
    time_labels: Sequence[str] | None = None,
) -> RMDataset:
    """Convenience constructor from (label, matrix) pairs; subjects are
    auto-numbered within each group."""
    items: Iterable[tuple[str, object]]
    items = blocks.items() if isinstance(blocks, Mapping) else blocks
    groups = []
    for label, matrix in items:
        rows = [np.asarray(r, dtype=float) for r in matrix]
        subjects = tuple(f"s{i + 1}" for i in range(len(rows)))
        groups.append(GroupData(str(label), subjects, rows))
    raw = RMDataset(
        groups=tuple(groups),
        time_labels=tuple(time_labels) if time_labels else (),
    )
    return validate_dataset(raw)


def _arrays(data: RMDataset) -> list[np.ndarray]:
    return [block.values for block in data.groups]


# ---------------------------------------------------------------------------
# F tables


def _f_and_p(ss_num: float, df_num: float, ms_err: float, df_err: float):
    """F ratio and upper-tail p with the zero-variance convention: a zero
    effect SS gives F = 0, p = 1 even when the error MS is also zero."""
    if ms_err == 0.0:
        if ss_num == 0.0:
            return 0.0, 1.0
        raise ZeroVarianceError(
            "error mean square is zero while the effect sum of squares is "
            "positive; the F statistic is undefined"
        )
    f_value = (ss_num / df_num) / ms_err
    return f_value, 1.0 - f_cdf(f_value, df_num, df_err)


def one_sample_rm_anova(data: RMDataset, diagnostics: bool = True) -> AnovaTable:
    """One-group repeated-measures ANOVA: time effect tested against the
    subject-by-time residual with df (t-1) and (n-1)(t-1)."""
    data = validate_dataset(data)
    if data.n_groups != 1:
        raise DomainError(
            f"one_sample_rm_anova needs exactly one group, got {data.n_groups}"
        )
    y = data.groups[0].values
    n, t = y.shape
    grand = y.mean()
    time_means = y.mean(axis=0)
    subj_means = y.mean(axis=1)

    ss_subject = t * float(((subj_means - grand) ** 2).sum())
    ss_time = n * float(((time_means - grand) ** 2).sum())
    resid = y - subj_means[:, None] - time_means[None, :] + grand
    ss_error = float((resid**2).sum())

    df_subject = float(n - 1)
    df_time = float(t - 1)
    df_error = float((n - 1) * (t - 1))
    ms_error = ss_error / df_error
    f_time, p_time = _f_and_p(ss_time, df_time, ms_error, df_error)

    rows = (
        AnovaRow(SOURCE_SUBJECT_ONE, ss_subject, df_subject, ss_subject / df_subject),
        AnovaRow(
            SOURCE_TIME,
            ss_time,
            df_time,
            ss_time / df_time,
            f=f_time,
            df_error=df_error,
            p=p_time,
        ),
        AnovaRow(SOURCE_ERROR, ss_error, df_error, ms_error),
    )
    sphericity = _sphericity_or_none(data) if diagnostics else None
    return AnovaTable(rows=rows, sphericity=sphericity)


def multi_sample_rm_anova(data: RMDataset, diagnostics: bool = True) -> AnovaTable:
    """Split-plot repeated-measures ANOVA.

    Group is tested against Subject(Group) with df (g-1, n-g); Time and
    Group:Time share the within-subject error with df (n-g)(t-1). With a
    single group the Group rows vanish and the table equals the one-sample
    routine's.
    """
    data = validate_dataset(data)
    arrays = _arrays(data)
    g = data.n_groups
    t = data.n_times
    sizes = np.array(data.group_sizes, dtype=float)
    n = float(sizes.sum())

    all_values = np.concatenate(arrays, axis=0)
    grand = all_values.mean()
    group_means = np.array([y.mean() for y in arrays])
    time_means = all_values.mean(axis=0)
    cell_means = [y.mean(axis=0) for y in arrays]
    subj_means = [y.mean(axis=1) for y in arrays]

    ss_group = t * float((sizes * (group_means - grand) ** 2).sum())
    ss_subject = t * sum(
        float(((sm - gm) ** 2).sum()) for sm, gm in zip(subj_means, group_means)
    )
    ss_time = n * float(((time_means - grand) ** 2).sum())
    ss_inter = float(
        sum(
            nk * ((cm - gm - time_means + grand) ** 2).sum()
            for nk, cm, gm in zip(sizes, cell_means, group_means)
        )
    )
    ss_error = float(
        sum(
            ((y - cm[None, :] - sm[:, None] + gm) ** 2).sum()
            for y, cm, sm, gm in zip(arrays, cell_means, subj_means, group_means)
        )
    )

    df_group = float(g - 1)
    df_subject = float(n - g)
    df_time = float(t - 1)
    df_inter = float((g - 1) * (t - 1))
    df_error = float((n - g) * (t - 1))

    ms_subject = ss_subject / df_subject
    ms_error = ss_error / df_error

    rows: list[AnovaRow] = []
    if g > 1:
        f_group, p_group = _f_and_p(ss_group, df_group, ms_subject, df_subject)
        rows.append(
            AnovaRow(
                SOURCE_GROUP,
                ss_group,
                df_group,
                ss_group / df_group,
                f=f_group,
                df_error=df_subject,
                p=p_group,
            )
        )
    subject_source = SOURCE_SUBJECT if g > 1 else SOURCE_SUBJECT_ONE
    rows.append(AnovaRow(subject_source, ss_subject, df_subject, ms_subject))
    f_time, p_time = _f_and_p(ss_time, df_time, ms_error, df_error)
    rows.append(
        AnovaRow(
            SOURCE_TIME,
            ss_time,
            df_time,
            ss_time / df_time,
            f=f_time,
            df_error=df_error,
            p=p_time,
        )
    )
    if g > 1:
        f_inter, p_inter = _f_and_p(ss_inter, df_inter, ms_error, df_error)
        rows.append(
            AnovaRow(
                SOURCE_INTERACTION,
                ss_inter,
                df_inter,
                ss_inter / df_inter,
                f=f_inter,
                df_error=df_error,
                p=p_inter,
            )
        )
    rows.append(AnovaRow(SOURCE_ERROR, ss_error, df_error, ms_error))

    sphericity = _sphericity_or_none(data) if diagnostics else None
    return AnovaTable(rows=tuple(rows), sphericity=sphericity)


def effects_decomposition(data: RMDataset) -> EffectsDecomposition:
    """Cell-mean estimates of all model effects; the reconstruction
    grand + subject + time + group + interaction + residual reproduces
    every observation exactly."""
    data = validate_dataset(data)
    arrays = _arrays(data)
    all_values = np.concatenate(arrays, axis=0)
    grand = float(all_values.mean())
    time_eff = all_values.mean(axis=0) - grand
    group_eff = np.array([y.mean() - grand for y in arrays])
    # (tau gamma)_kj = cellmean_kj - groupmean_k - timemean_j + grand
    inter_eff = np.vstack(
        [y.mean(axis=0) - y.mean() - time_eff for y in arrays]
    )
    subject_eff = tuple(y.mean(axis=1) - y.mean() for y in arrays)
    residuals = tuple(
        y - y.mean(axis=0)[None, :] - y.mean(axis=1)[:, None] + y.mean()
        for y in arrays
    )
    return EffectsDecomposition(
        grand_mean=grand,
        time_effects=time_eff,
        group_effects=group_eff,
        interaction_effects=inter_eff,
        subject_effects=subject_eff,
        residuals=residuals,
    )


# ---------------------------------------------------------------------------
# sphericity diagnostics


def _helmert_contrasts(t: int) -> np.ndarray:
    """(t-1) x t orthonormal contrast rows, each orthogonal to the
    all-ones vector."""
    c = np.zeros((t - 1, t))
    for j in range(1, t):
        c[j - 1, :j] = 1.0
        c[j - 1, j] = -float(j)
        c[j - 1] /= math.sqrt(j * (j + 1.0))
    return c


def _pooled_covariance(data: RMDataset) -> tuple[np.ndarray, int]:
    """Within-group covariance of the time vectors pooled over groups,
    with divisor n - g."""
    arrays = _arrays(data)
    n = data.n_total
    g = data.n_groups
    if n - g < 1:
        raise SingularCovarianceError("no residual degrees of freedom for covariance")
    t = data.n_times
    acc = np.zeros((t, t))
    for y in arrays:
        centered = y - y.mean(axis=0, keepdims=True)
        acc += centered.T @ centered
    return acc / (n - g), n - g


def _contrast_covariance(data: RMDataset) -> tuple[np.ndarray, int]:
    cov, df_cov = _pooled_covariance(data)
    c = _helmert_contrasts(data.n_times)
    return c @ cov @ c.T, df_cov


_TRIVIAL_SPHERICITY = SphericityReport(
    mauchly_w=1.0, chisq=0.0, df=0, p=1.0, eps_gg=1.0, eps_hf=1.0, eps_lower_bound=1.0
)


def mauchly_test(data: RMDataset) -> SphericityReport:
    """Mauchly's sphericity test on the pooled within-group covariance,
    with the Greenhouse-Geisser / Huynh-Feldt epsilons filled in.

    W = det(A) / (tr(A)/(t-1))^(t-1) for the orthonormal-contrast
    covariance A; the chi-square approximation uses the small-sample
    factor d = 1 - (2(t-1)^2 + (t-1) + 2) / (6(t-1)(n-g)).
    """
    data = validate_dataset(data)
    t = data.n_times
    if t == 2:
        return _TRIVIAL_SPHERICITY
    a, df_cov = _contrast_covariance(data)
    if df_cov < t - 1:
        raise SingularCovarianceError(
            f"pooled covariance has {df_cov} residual df; need at least "
            f"{t - 1} to test sphericity with t={t}"
        )
    sign, logdet = np.linalg.slogdet(a)
    trace = float(np.trace(a))
    if sign <= 0 or trace <= 0:
        raise SingularCovarianceError("contrast covariance is singular")
    p_dim = t - 1
    log_w = float(logdet) - p_dim * math.log(trace / p_dim)
    w = math.exp(min(0.0, log_w))
    d = 1.0 - (2.0 * p_dim * p_dim + p_dim + 2.0) / (6.0 * p_dim * df_cov)
    chisq = max(0.0, -df_cov * d * min(0.0, log_w))
    df = t * (t - 1) // 2 - 1
    p = 1.0 - chisq_cdf(chisq, df) if chisq > 0 else 1.0
    eps_gg, eps_hf = _epsilons_from_contrast(a, data.n_total, data.n_groups, t)
    return SphericityReport(
        mauchly_w=w,
        chisq=chisq,
        df=df,
        p=p,
        eps_gg=eps_gg,
        eps_hf=eps_hf,
        eps_lower_bound=1.0 / (t - 1),
    )


def _epsilons_from_contrast(
    a: np.ndarray, n: int, g: int, t: int
) -> tuple[float, float]:
    p_dim = t - 1
    trace = float(np.trace(a))
    frob2 = float((a * a).sum())  # tr(A^2) = sum of eigenvalues squared
    if frob2 <= 0:
        raise SingularCovarianceError("contrast covariance is zero")
    lower = 1.0 / p_dim
    eps_gg = min(1.0, max(lower, trace * trace / (p_dim * frob2)))
    hf_den = p_dim * (n - g - p_dim * eps_gg)
    if hf_den <= 0:
        eps_hf = 1.0
    else:
        eps_hf = min(1.0, (n * p_dim * eps_gg - 2.0) / hf_den)
    return eps_gg, eps_hf


def estimate_epsilons(data: RMDataset) -> tuple[float, float]:
    """(Greenhouse-Geisser, Huynh-Feldt) nonsphericity corrections; both
    equal 1 at t = 2."""
    data = validate_dataset(data)
    t = data.n_times
    if t == 2:
        return 1.0, 1.0
    a, df_cov = _contrast_covariance(data)
    if df_cov < t - 1:
        raise SingularCovarianceError(
            f"pooled covariance has {df_cov} residual df; need at least {t - 1}"
        )
    return _epsilons_from_contrast(a, data.n_total, data.n_groups, t)


def _sphericity_or_none(data: RMDataset) -> SphericityReport | None:
    try:
        return mauchly_test(data)
    except SingularCovarianceError:
        return None


def adjusted_pvalues(table: AnovaTable, eps: float) -> AnovaTable:
    """Recompute the within-subject p-values with both dfs scaled by eps
    (F statistics unchanged). eps = 1 returns the table verbatim apart
    from recording the applied correction."""
    if not 0.0 < eps <= 1.0:
        raise DomainError(f"epsilon must be in (0, 1], got {eps}")
    rows = []
    for row in table.rows:
        if row.source in WITHIN_SOURCES and row.f is not None:
            if row.f == 0.0:
                p = 1.0
            else:
                p = 1.0 - f_cdf(row.f, row.df * eps, row.df_error * eps)
            rows.append(replace(row, p=p))
        else:
            rows.append(row)
    return AnovaTable(
        rows=tuple(rows), sphericity=table.sphericity, epsilon_applied=eps
    )


# ---------------------------------------------------------------------------
# Friedman rank test


def _midranks(row: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Average ranks of one row plus the sizes of its tie runs."""
    order = np.argsort(row, kind="stable")
    ranks = np.empty(row.shape[0])
    tie_sizes: list[int] = []
    i = 0
    while i < row.shape[0]:
        j = i
        while j + 1 < row.shape[0] and row[order[j + 1]] == row[order[i]]:
            j += 1
        avg = 0.5 * (i + j) + 1.0
        for k in range(i, j + 1):
            ranks[order[k]] = avg
        tie_sizes.append(j - i + 1)
        i = j + 1
    return ranks, tie_sizes


def friedman_test(data: RMDataset) -> FriedmanResult:
    """Friedman's rank test for one group: mid-ranks within each subject,
    chi-square statistic with the standard tie-correction divisor."""
    data = validate_dataset(data)
    if data.n_groups != 1:
        raise DomainError("friedman_test applies to a single group")
    y = data.groups[0].values
    n, t = y.shape
    if t < 3:
        raise DomainError(f"friedman_test needs t >= 3, got t={t}")

    rank_sums = np.zeros(t)
    tie_term = 0.0
    for row in y:
        ranks, tie_sizes = _midranks(row)
        rank_sums += ranks
        tie_term += sum(c**3 - c for c in tie_sizes)

    correction = 1.0 - tie_term / (n * t * (t * t - 1.0))
    if correction <= 0.0:
        raise DegenerateDataError(
            "every row is fully tied; the rank test carries no information"
        )
    q = (12.0 / (n * t * (t + 1.0))) * float((rank_sums**2).sum()) - 3.0 * n * (t + 1.0)
    statistic = q / correction
    df = t - 1
    p = 1.0 - chisq_cdf(max(0.0, statistic), df)
    return FriedmanResult(statistic=statistic, df=df, p=p)
