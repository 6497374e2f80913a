"""Distribution substrate tests.

Expected values marked "oracle" were produced by adaptive quadrature over
the corresponding densities (scipy.integrate.quad with math.lgamma
normalization), an independent path from the continued-fraction / series
implementations under test. The oracles are also evaluated live on
randomized grids.
"""

import math

import numpy as np
import pytest
from scipy import integrate, stats

from rmpower.distributions import (
    chisq_cdf,
    f_cdf,
    f_quantile,
    ln_gamma,
    noncentral_f_cdf,
    reg_inc_beta,
)
from rmpower.errors import DomainError


def beta_cdf_oracle(x, a, b):
    def density(t):
        ln_norm = math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)
        return math.exp((a - 1) * math.log(t) + (b - 1) * math.log1p(-t) - ln_norm)

    value, _ = integrate.quad(density, 0.0, x, epsabs=1e-13, epsrel=1e-13, limit=200)
    return value


def chisq_cdf_oracle(x, df):
    def density(t):
        s = df / 2.0
        return math.exp(-t / 2.0 + (s - 1) * math.log(t) - s * math.log(2.0) - math.lgamma(s))

    value, _ = integrate.quad(density, 0.0, x, epsabs=1e-13, limit=200)
    return value


def ncf_cdf_oracle(x, d1, d2, lam):
    value, _ = integrate.quad(
        lambda t: stats.ncf.pdf(t, d1, d2, lam), 0.0, x, epsabs=1e-12, limit=200
    )
    return value


class TestLnGamma:
    def test_factorial_points(self):
        assert ln_gamma(1.0) == pytest.approx(0.0, abs=1e-12)
        assert ln_gamma(5.0) == pytest.approx(math.log(24.0), abs=1e-12)

    def test_half(self):
        assert ln_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), abs=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            ln_gamma(0.0)
        with pytest.raises(DomainError):
            ln_gamma(-2.5)


class TestRegIncBeta:
    def test_boundaries(self):
        for a, b in [(0.5, 0.5), (2, 5), (30, 7)]:
            assert reg_inc_beta(0.0, a, b) == 0.0
            assert reg_inc_beta(1.0, a, b) == 1.0

    def test_symmetry_at_half(self):
        for a in (0.3, 1.0, 4.0, 25.0):
            assert reg_inc_beta(0.5, a, a) == pytest.approx(0.5, abs=1e-13)

    def test_oracle_point(self):
        # quadrature oracle: I_0.3(2, 5)
        assert reg_inc_beta(0.3, 2.0, 5.0) == pytest.approx(0.579825, abs=1e-10)

    def test_oracle_grid(self):
        rng = np.random.default_rng(101)
        for _ in range(40):
            a = float(10 ** rng.uniform(-1, 2))
            b = float(10 ** rng.uniform(-1, 2))
            x = float(rng.uniform(0.02, 0.98))
            assert reg_inc_beta(x, a, b) == pytest.approx(
                beta_cdf_oracle(x, a, b), abs=1e-10
            )

    def test_reflection_identity(self):
        rng = np.random.default_rng(55)
        for _ in range(50):
            a = float(10 ** rng.uniform(-1, 2))
            b = float(10 ** rng.uniform(-1, 2))
            x = float(rng.uniform(0, 1))
            assert reg_inc_beta(x, a, b) == pytest.approx(
                1.0 - reg_inc_beta(1.0 - x, b, a), abs=1e-12
            )

    def test_monotone_in_x(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            a = float(10 ** rng.uniform(-1, 1.5))
            b = float(10 ** rng.uniform(-1, 1.5))
            grid = np.sort(rng.uniform(0, 1, size=25))
            values = [reg_inc_beta(float(x), a, b) for x in grid]
            assert all(v2 >= v1 - 1e-14 for v1, v2 in zip(values, values[1:]))

    def test_domain(self):
        with pytest.raises(DomainError):
            reg_inc_beta(-0.1, 1, 1)
        with pytest.raises(DomainError):
            reg_inc_beta(1.1, 1, 1)
        with pytest.raises(DomainError):
            reg_inc_beta(0.5, 0.0, 1)
        with pytest.raises(DomainError):
            reg_inc_beta(0.5, 1, -1)


class TestFCdf:
    def test_at_zero(self):
        assert f_cdf(0.0, 3, 10) == 0.0

    def test_symmetry_equal_dfs(self):
        # X/Y and Y/X have the same law when the dfs match, so F=1 is the median
        for df in (1.0, 4.0, 17.5):
            assert f_cdf(1.0, df, df) == pytest.approx(0.5, abs=1e-12)

    def test_oracle_point(self):
        # quadrature oracle over the F density
        assert f_cdf(3.007, 4, 16) == pytest.approx(0.9500041139145291, abs=1e-10)

    def test_noninteger_dfs(self):
        # epsilon-scaled dfs are reals; compare against the beta reduction
        value = f_cdf(1.7, 3.2, 77.5)
        u = 3.2 * 1.7 / (3.2 * 1.7 + 77.5)
        assert value == pytest.approx(beta_cdf_oracle(u, 1.6, 38.75), abs=1e-10)

    def test_domain(self):
        with pytest.raises(DomainError):
            f_cdf(-1.0, 3, 10)
        with pytest.raises(DomainError):
            f_cdf(1.0, 0, 10)


class TestFQuantile:
    def test_median_equal_dfs(self):
        assert f_quantile(0.5, 10, 10) == pytest.approx(1.0, abs=1e-9)

    def test_oracle_point(self):
        assert f_quantile(0.95, 3, 108) == pytest.approx(2.688691468027683, abs=2e-9)

    def test_round_trip_both_ways(self):
        for d1, d2 in [(1, 5), (3, 108), (12.5, 80.0), (4, 16)]:
            for q in np.linspace(0.01, 0.99, 15):
                x = f_quantile(float(q), d1, d2)
                assert f_cdf(x, d1, d2) == pytest.approx(float(q), abs=1e-9)
        for d1, d2 in [(2, 12), (8, 30)]:
            for x in (0.2, 0.7, 1.3, 2.9):
                q = f_cdf(x, d1, d2)
                assert f_quantile(q, d1, d2) == pytest.approx(x, rel=1e-9)

    def test_domain(self):
        with pytest.raises(DomainError):
            f_quantile(0.0, 3, 10)
        with pytest.raises(DomainError):
            f_quantile(1.0, 3, 10)


class TestChisqCdf:
    def test_at_zero(self):
        assert chisq_cdf(0.0, 4) == 0.0

    def test_exponential_median(self):
        # chi-square with 2 df is Exp(1/2); median at 2 ln 2
        assert chisq_cdf(2.0 * math.log(2.0), 2) == pytest.approx(0.5, abs=1e-12)

    def test_oracle_point(self):
        assert chisq_cdf(9.4877, 4) == pytest.approx(0.9499994004587654, abs=1e-10)

    def test_oracle_grid(self):
        rng = np.random.default_rng(31)
        for _ in range(25):
            df = float(10 ** rng.uniform(-0.3, 1.8))
            x = float(10 ** rng.uniform(-1.5, 2.0))
            assert chisq_cdf(x, df) == pytest.approx(chisq_cdf_oracle(x, df), abs=1e-10)

    def test_domain(self):
        with pytest.raises(DomainError):
            chisq_cdf(-0.5, 3)
        with pytest.raises(DomainError):
            chisq_cdf(1.0, 0)


class TestNoncentralFCdf:
    def test_central_reduction(self):
        rng = np.random.default_rng(13)
        for _ in range(20):
            d1 = float(rng.uniform(0.5, 20))
            d2 = float(rng.uniform(1, 150))
            x = float(10 ** rng.uniform(-1, 1))
            assert noncentral_f_cdf(x, d1, d2, 0.0) == pytest.approx(
                f_cdf(x, d1, d2), abs=1e-12
            )

    def test_limit_at_large_x(self):
        assert noncentral_f_cdf(1e8, 4, 80, 15.0) == pytest.approx(1.0, abs=1e-9)
        assert noncentral_f_cdf(1e8, 2, 10, 55.0) == pytest.approx(1.0, abs=1e-9)

    def test_oracle_point(self):
        # quadrature oracle over the noncentral F density
        assert noncentral_f_cdf(2.5, 4, 80, 15.0) == pytest.approx(
            0.13195651262996466, abs=1e-8
        )

    def test_oracle_grid(self):
        rng = np.random.default_rng(97)
        for _ in range(25):
            d1 = float(rng.uniform(1, 20))
            d2 = float(rng.uniform(4, 150))
            lam = float(rng.choice([0.0, 15.0, 40.0]) + rng.uniform(0, 5))
            x = float(10 ** rng.uniform(-0.5, 1.0))
            assert noncentral_f_cdf(x, d1, d2, lam) == pytest.approx(
                ncf_cdf_oracle(x, d1, d2, lam), abs=1e-8
            )

    def test_monotone_in_x(self):
        grid = np.linspace(0.0, 8.0, 40)
        values = [noncentral_f_cdf(float(x), 5, 60, 12.0) for x in grid]
        assert all(v2 >= v1 - 1e-14 for v1, v2 in zip(values, values[1:]))

    def test_stochastic_ordering_in_lambda(self):
        rng = np.random.default_rng(23)
        for _ in range(20):
            d1 = float(rng.uniform(1, 15))
            d2 = float(rng.uniform(4, 120))
            x = float(10 ** rng.uniform(-0.5, 0.8))
            lams = np.sort(rng.uniform(0, 80, size=8))
            values = [noncentral_f_cdf(x, d1, d2, float(lam)) for lam in lams]
            assert all(v2 <= v1 + 1e-12 for v1, v2 in zip(values, values[1:]))

    def test_large_lambda_stays_finite(self):
        # the solver probes f up to 10, driving lambda into the thousands
        for lam in (2e3, 5e4, 1e6):
            value = noncentral_f_cdf(3.0, 4.0, 64.0, lam)
            assert 0.0 <= value <= 1.0

    def test_no_nan_fuzz(self):
        rng = np.random.default_rng(3)
        for _ in range(200):
            d1 = float(10 ** rng.uniform(-0.5, 2))
            d2 = float(10 ** rng.uniform(-0.5, 2.5))
            lam = float(10 ** rng.uniform(-3, 4))
            x = float(10 ** rng.uniform(-3, 3))
            value = noncentral_f_cdf(x, d1, d2, lam)
            assert not math.isnan(value)
            assert 0.0 <= value <= 1.0

    def test_domain(self):
        with pytest.raises(DomainError):
            noncentral_f_cdf(1.0, 3, 10, -0.5)
        with pytest.raises(DomainError):
            noncentral_f_cdf(-1.0, 3, 10, 2.0)
