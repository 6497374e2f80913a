"""rmpower: power analysis, sample-size solving, and repeated-measures ANOVA
for longitudinal study designs, with a Monte Carlo validation harness and a
CLI / local HTTP service."""

from .csvio import (
    curve_to_csv,
    dataset_to_wide_csv,
    parse_curve_csv,
    parse_long_csv,
    parse_wide_csv,
)
from .distributions import (
    chisq_cdf,
    f_cdf,
    f_quantile,
    ln_gamma,
    noncentral_f_cdf,
    reg_inc_beta,
)
from .errors import (
    CsvError,
    DatasetError,
    DegenerateDataError,
    DomainError,
    InvalidDesignError,
    RmPowerError,
    SingularCovarianceError,
    UnsatisfiableError,
    ZeroVarianceError,
)
from .mcvalidate import (
    MCPowerEstimate,
    SimSpec,
    estimate_power_mc,
    mean_pattern,
    simulate_dataset,
)
from .power import (
    CurvePoint,
    CurveTable,
    EffectSpec,
    NoncentralitySpec,
    PowerResult,
    SampleSizeResult,
    StudyDesign,
    TestKind,
    compute_power,
    f_from_eta_squared,
    minimal_detectable_effect,
    noncentrality,
    power_curve,
    required_sample_size,
)
from .rmanova import (
    AnovaRow,
    AnovaTable,
    EffectsDecomposition,
    FriedmanResult,
    GroupData,
    RMDataset,
    SphericityReport,
    adjusted_pvalues,
    effects_decomposition,
    estimate_epsilons,
    friedman_test,
    make_dataset,
    mauchly_test,
    multi_sample_rm_anova,
    one_sample_rm_anova,
    validate_dataset,
)

__version__ = "0.1.0"
