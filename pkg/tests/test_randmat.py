"""Random-matrix model tests (seeded; statistical bands are 3 estimated
standard errors, exact identities are exact)."""

import numpy as np
import pytest

from freetan.laws import LawParams, moments_of_limit
from freetan.randmat import (
    Permutation,
    SimConfig,
    gue_moment_estimates,
    histogram,
    mc_product_moment,
    pairing_expected_moment,
    sample_complex_gaussian,
    sample_gue,
    sample_stream,
    simulate_sandwich_model,
    simulate_wishart_model,
)
from freetan.spectra import StructuredMatrixSpec, build


def tangent_matrix(n):
    return build(StructuredMatrixSpec(n, 0.0, 1j))


class TestSamplers:
    def test_gue_hermitian_exactly(self):
        y = sample_gue(40, sample_stream(1, 0))
        assert np.max(np.abs(y - y.conj().T)) == 0.0

    def test_gue_trace_square(self):
        n, samples = 50, 400
        vals = np.array(
            [np.linalg.norm(sample_gue(n, sample_stream(42, s))) ** 2 for s in range(samples)]
        )
        band = 3 * vals.std(ddof=1) / np.sqrt(samples)
        assert abs(vals.mean() - n) <= band

    def test_gue_entry_variances(self):
        n, samples = 6, 4000
        diag = np.empty(samples)
        off_re = np.empty(samples)
        off_im = np.empty(samples)
        for s in range(samples):
            y = sample_gue(n, sample_stream(7, s))
            diag[s] = y[2, 2].real
            off_re[s] = y[0, 1].real
            off_im[s] = y[0, 1].imag
        assert diag.var(ddof=1) == pytest.approx(1 / n, rel=0.2)
        assert off_re.var(ddof=1) == pytest.approx(1 / (2 * n), rel=0.2)
        assert off_im.var(ddof=1) == pytest.approx(1 / (2 * n), rel=0.2)

    def test_complex_gaussian_variance(self):
        n, draws = 100, 10000
        rng = sample_stream(3, 0)
        x = sample_complex_gaussian(n, draws, rng)
        mags = np.abs(x[0, :]) ** 2
        band = 3 * mags.std(ddof=1) / np.sqrt(draws)
        assert abs(mags.mean() - 1 / n) <= band
        assert abs(x.mean()) <= 3 / np.sqrt(2 * n * n * draws)
        # Re/Im independence
        cov = np.mean(x.real * x.imag) - x.real.mean() * x.imag.mean()
        assert abs(cov) <= 3 * (1 / (2 * n)) / np.sqrt(n * draws)


class TestDeterminism:
    def test_wishart_bit_identical(self):
        cfg = SimConfig(N=16, M=16, samples=4, seed=2024)
        a_m = tangent_matrix(16)
        s1 = simulate_wishart_model(a_m, cfg)
        s2 = simulate_wishart_model(a_m, cfg)
        assert np.array_equal(s1.eigenvalues, s2.eigenvalues)

    def test_per_sample_streams_independent_of_order(self):
        # sample s alone equals sample s within a longer run
        cfg_all = SimConfig(N=12, M=12, samples=3, seed=5)
        a_m = tangent_matrix(12)
        full = simulate_wishart_model(a_m, cfg_all)
        third = simulate_wishart_model(a_m, SimConfig(N=12, M=12, samples=1, seed=5))
        assert np.array_equal(full.eigenvalues[:12], third.eigenvalues)

    def test_different_seeds_differ(self):
        a = sample_gue(8, sample_stream(1, 0))
        b = sample_gue(8, sample_stream(2, 0))
        assert not np.array_equal(a, b)


class TestPermutation:
    def test_full_cycle(self):
        g = Permutation.full_cycle(4)
        assert g.cycles() == [(1, 2, 3, 4)]

    def test_shift_pairing_composition(self):
        # the shift matching composed with the full cycle isolates the
        # even positions as fixed points
        p = Permutation.from_pairing(((2, 3), (4, 5), (6, 1)), 6)
        cycles = p.compose(Permutation.full_cycle(6)).cycles()
        assert cycles == [(1, 3, 5), (2,), (4,), (6,)]

    def test_bijection_enforced(self):
        with pytest.raises(ValueError):
            Permutation([1, 1, 3])


class TestPairingExpectations:
    def test_m2_identity(self):
        d = np.diag([1.0, 2.0, 3.0])
        assert pairing_expected_moment(np.eye(3), (0, 0)) == pytest.approx(3.0)
        assert pairing_expected_moment(d, (1, 0)) == pytest.approx(np.trace(d).real)

    def test_odd_is_zero(self):
        assert pairing_expected_moment(np.eye(3), (1, 0, 1)) == 0.0

    def test_m4_hand_value(self):
        # diag(1,2,3), q = (1,0,1,0): pairings give Tr(D)^2 Tr(I), Tr(D^2)
        # and Tr(D^2) Tr(I)^2; total (108 + 14 + 126)/9
        d = np.diag([1.0, 2.0, 3.0])
        assert pairing_expected_moment(d, (1, 0, 1, 0)) == pytest.approx(248 / 9)

    def test_matches_monte_carlo(self):
        rng_configs = [
            (np.eye(3), (1, 0, 1, 0)),
            (np.diag(np.arange(1.0, 4.0)) / 3, (1, 1, 1, 1)),
            (tangent_matrix(3) / 3, (1, 0, 1, 0, 1, 0)),
            (np.eye(10), (2, 0)),
        ]
        for i, (d, qs) in enumerate(rng_configs):
            exact = pairing_expected_moment(d, qs)
            mc, se = mc_product_moment(d, qs, 30000, 1000 + i)
            assert abs(mc - exact) <= 3 * se + 1e-12


class TestSandwichModel:
    def test_zero_matrix(self):
        cfg = SimConfig(N=10, samples=3, seed=1)
        res = simulate_sandwich_model(np.zeros((10, 10)), cfg, orders=(1, 2))
        assert res.means == (0.0, 0.0)

    def test_first_moment_is_trace(self):
        n = 40
        d = tangent_matrix(n) / n
        cfg = SimConfig(N=n, samples=300, seed=9)
        res = simulate_sandwich_model(d, cfg, orders=(1,))
        assert abs(res.means[0] - np.trace(d).real) <= 3 * res.stderrs[0] + 1e-12

    def test_second_moment_near_trace_of_square(self):
        n = 100
        d = tangent_matrix(n) / n
        cfg = SimConfig(N=n, samples=150, seed=31)
        res = simulate_sandwich_model(d, cfg, orders=(2,))
        target = pairing_expected_moment(d, (1, 0, 1, 0))
        assert abs(res.means[0] - target) <= 3 * res.stderrs[0]
        # and the finite-N expectation is already close to Tr(D^2)
        assert target == pytest.approx((n * n - n) / n**2, abs=0.05)


class TestWishartModel:
    def test_zero_coefficients(self):
        cfg = SimConfig(N=12, M=12, samples=2, seed=77)
        spec = simulate_wishart_model(np.zeros((12, 12)), cfg)
        assert np.max(np.abs(spec.eigenvalues)) == 0.0

    def test_identity_coefficients_mean_one(self):
        cfg = SimConfig(N=48, M=48, samples=6, seed=13)
        spec = simulate_wishart_model(np.eye(48), cfg)
        assert spec.normalized_moment(1) == pytest.approx(1.0, abs=0.05)

    def test_dimension_check(self):
        cfg = SimConfig(N=8, M=8, samples=1, seed=0)
        with pytest.raises(ValueError):
            simulate_wishart_model(np.eye(7), cfg)
        with pytest.raises(ValueError):
            simulate_wishart_model(np.eye(8), cfg, p_matrix=np.eye(9))

    def test_tangent_config_moments(self):
        n = 80
        cfg = SimConfig(N=n, M=n, samples=6, seed=2718)
        spec = simulate_wishart_model(tangent_matrix(n), cfg)
        limits = moments_of_limit(LawParams.tangent(), 4)
        assert spec.normalized_moment(2) == pytest.approx(float(limits[1]), rel=0.1)
        assert spec.normalized_moment(4) == pytest.approx(float(limits[3]), rel=0.15)

    def test_projection_variant(self):
        n = 32
        p = np.eye(n) - np.ones((n, n)) / n
        cfg = SimConfig(N=n, M=n, samples=4, seed=4)
        spec = simulate_wishart_model(tangent_matrix(n), cfg, p_matrix=p)
        assert spec.normalized_moment(2) == pytest.approx(1.0, rel=0.2)


class TestGueMoments:
    def test_semicircle_moments(self):
        orders, means, errs = gue_moment_estimates(
            SimConfig(N=120, samples=40, seed=5), (2, 4, 6)
        )
        for mean, target, err in zip(means, (1.0, 2.0, 5.0), errs):
            assert abs(mean - target) < max(0.05 * target, 5 * err)


class TestHistogram:
    def test_uniform_counts(self):
        rng = sample_stream(20, 0)
        data = rng.uniform(0, 1, 20000)
        hist = histogram(data, 10)
        expected = 2000
        sigma = np.sqrt(20000 * 0.1 * 0.9)
        assert np.all(np.abs(hist.counts - expected) <= 4 * sigma)

    def test_density_normalization(self):
        rng = sample_stream(18, 0)
        data = rng.standard_normal(5000)
        hist = histogram(data, 37)
        integral = float(np.sum(hist.density * np.diff(hist.bin_edges)))
        assert integral == pytest.approx(1.0, abs=1e-12)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            histogram(np.array([]), 10)
