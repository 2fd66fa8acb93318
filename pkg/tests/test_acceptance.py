"""Acceptance suite: the eleven go/no-go criteria, each with its stated
tolerance and runtime budget.  One PASS/FAIL line is printed per
criterion (visible with pytest -s / -v)."""

import math
import random
import time
from contextlib import contextmanager

import numpy as np
import pytest

from freetan import analysis, combinatorics, laws, partitions, randmat, spectra

PARAM_POINTS = [
    (0.0, 1.0),
    (1 / math.sqrt(2), 1 / math.sqrt(2)),
    (0.6, 0.8),
    (-0.6, 0.8),
]
FIVE_ANGLES = (math.pi / 6, math.pi / 4, math.pi / 3, math.pi / 2, 2 * math.pi / 3)


@contextmanager
def criterion(number, label, budget_seconds=None):
    start = time.monotonic()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {number:2d} FAIL {label}")
        raise
    elapsed = time.monotonic() - start
    print(f"ACCEPTANCE {number:2d} PASS {label} ({elapsed:.2f}s)")
    if budget_seconds is not None:
        assert elapsed < budget_seconds, f"runtime {elapsed:.2f}s over budget"


def test_criterion_01_exact_combinatorics():
    with criterion(1, "tangent numbers and zigzag sum identity", 1.0):
        tn = combinatorics.tangent_numbers(12)  # both routes, must agree
        assert tn[:4] == [1, 2, 16, 272]
        for n in range(1, 21):
            lhs, rhs = combinatorics.zigzag_sum_identity(n)
            assert lhs == rhs


def test_criterion_02_closed_form_vs_jacobi():
    with criterion(2, "closed-form eigenvalues vs Jacobi, n <= 64", 10.0):
        rng = np.random.default_rng(99)
        for a, b in PARAM_POINTS:
            for n in range(1, 65):
                spec = spectra.StructuredMatrixSpec(n, 0.0, complex(a, b))
                closed = spectra.closed_form_eigenvalues(spec)
                direct = spectra.hermitian_eigenvalues(spectra.build(spec))
                assert float(np.max(np.abs(closed - direct))) < 1e-9
            # characteristic-polynomial residuals at the eigenvalues,
            # scaled by the natural magnitude (|lam| + |w|)^n / b
            for n in (2, 3, 5, 8, 13, 21, 34, 55, 64):
                spec = spectra.StructuredMatrixSpec(n, 0.0, complex(a, b))
                for lam in spectra.closed_form_eigenvalues(spec):
                    scale = (abs(lam) + 1.0) ** n / b
                    assert abs(spectra.charpoly(spec, lam)) < 1e-8 * scale


def test_criterion_03_cotangent_identities():
    with criterion(3, "cotangent power-sum identities", 10.0):
        for n in range(1, 51):
            for m in range(1, 9):
                direct, closed = spectra.cotangent_sum_2m(n, m)
                assert abs(direct - closed) < 1e-8 * max(1.0, abs(closed))
            for m in range(1, 7):
                direct, closed = spectra.cotangent_sum_shifted(n, m)
                assert abs(direct - closed) < 1e-8 * max(1.0, abs(closed))


ENTRIES = [0, 1, -1, 1j, -1j, 0.5 + 0.5j, 0.5 - 0.5j, -0.5 + 0.5j, -0.5 - 0.5j]


def _random_hermitian(n, rng):
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = rng.choice([0, 1, -1])
        for j in range(i + 1, n):
            x = rng.choice(ENTRIES)
            a[i][j] = x
            a[j][i] = complex(x).conjugate()
    return a


def test_criterion_04_quadratic_form_oracle():
    with criterion(4, "quadratic-form cumulants equal exact trace powers", 60.0):
        curated = [
            [[1]],
            [[0, 1j], [-1j, 0]],
            [[0, 0], [0, 0]],
            [[0, 1j, 1j], [-1j, 0, 1j], [-1j, -1j, 0]],
            [
                [0, 0.5 + 0.5j, 0.5 + 0.5j],
                [0.5 - 0.5j, 0, 0.5 + 0.5j],
                [0.5 - 0.5j, 0.5 - 0.5j, 0],
            ],
        ]
        rng = random.Random(42424)
        small = curated + [_random_hermitian(n, rng) for n in (1, 2, 2, 3, 3, 3, 3)]
        for matrix in small:
            cums = partitions.quadratic_form_cumulants_oracle(matrix, 4)
            traces = spectra.exact_trace_powers(matrix, 4)
            assert cums == traces
        four = [
            [[0, 1j, 1j, 1j], [-1j, 0, 1j, 1j], [-1j, -1j, 0, 1j], [-1j, -1j, -1j, 0]],
        ] + [_random_hermitian(4, rng) for _ in range(5)]
        for matrix in four:
            cums = partitions.quadratic_form_cumulants_oracle(matrix, 3)
            traces = spectra.exact_trace_powers(matrix, 3)
            assert cums == traces


def test_criterion_05_limit_theorem_transforms():
    with criterion(5, "finite-size transform, cumulant formulas, 1/n rate"):
        # (a) series coefficients of the finite-n transform vs trace powers
        for a, b in PARAM_POINTS:
            p = laws.LawParams(a, b)
            for n in (1, 2, 3, 4, 6, 8, 12, 16, 24, 32):
                coeffs = laws.finite_n_cumulants(p, n, 8)
                for r in range(1, 9):
                    target = spectra.trace_power(p.matrix_spec(n), r) / float(n) ** r
                    assert abs(coeffs[r - 1] - target) < 1e-9
        # (b) three limit-cumulant formulas agree to 1e-10, r <= 16
        for alpha in FIVE_ANGLES:
            laws.limit_cumulants(laws.LawParams.from_angle(alpha), 16)
        # (c) n |K_r(Q_n) - K_r| bounded on n in {100..1000}, r <= 6
        for a, b in ((0.0, 1.0), (0.6, 0.8)):
            p = laws.LawParams(a, b)
            lim = laws.limit_cumulants(p, 6)
            ns = list(range(100, 1001, 100))
            for r in range(1, 7):
                scaled = [
                    n * abs(spectra.trace_power(p.matrix_spec(n), r) / float(n) ** r
                            - lim.values[r - 1])
                    for n in ns
                ]
                assert max(scaled) <= 1.5 * max(scaled[0], scaled[-1]) + 1e-9
                assert scaled[-1] <= 1.2 * scaled[4] + 1e-9  # no tail growth


def test_criterion_06_spectral_radii():
    with criterion(6, "spectral radii: fixed points and direct minimization"):
        res = analysis.spectral_radius(laws.LawParams.from_angle(math.pi / 2))
        assert abs(res.rho - 2.2644374158937358461) < 1e-10
        assert abs(res.u - 0.7390851332) < 1e-9
        assert abs(analysis.dottie(1e-14) - 0.7390851332) < 1e-9
        for alpha in (math.pi / 6, math.pi / 4, math.pi / 3, math.pi / 2, 3 * math.pi / 4):
            p = laws.LawParams.from_angle(alpha)
            closed = analysis.spectral_radius(p).rho
            minimized = analysis.spectral_radius_by_minimization(p)
            assert abs(closed - minimized) < 1e-8


def test_criterion_07_levy_structure():
    with criterion(7, "Levy-Khintchine truncation and atom masses"):
        p = laws.LawParams.tangent()
        for z in (0.3, 0.7, 1.0):
            for k_max in (100, 1000, 10000):
                c = analysis.levy_cumulant_transform(p, z, k_max)
                bound = 8 * abs(z) ** 3 / (math.pi**2 * k_max) * 1.25
                assert abs(c - z * math.tan(z)) <= bound
        atoms = analysis.levy_atoms(p, 3).atoms
        positive = sorted((x for x, _ in atoms if x > 0), reverse=True)[:3]
        for loc in positive:
            raw = [
                analysis.levy_atom_mass_check(p, loc, (eps,))
                for eps in (1e-2, 1e-3, 1e-4)
            ]
            errs = [abs(v - 1.0) for v in raw]
            assert errs[0] > errs[1] > errs[2]  # monotone approach to 1
            assert abs(analysis.levy_atom_mass_check(p, loc) - 1.0) < 1e-3


def test_criterion_08_huang_density():
    with criterion(8, "density inversion: mass, moments, symmetry, edge", 60.0):
        p = laws.LawParams.tangent()
        grid = analysis.density_grid(p, n_points=2001)
        assert abs(grid.mass - 1.0) < 1e-5
        assert abs(grid.moment(2) - 1.0) < 1e-4
        assert abs(grid.moment(4) - 7.0 / 3.0) < 1e-3
        assert np.all(grid.f >= 0.0)
        xs = np.linspace(0.0, grid.x_param[-1] * 0.999, 60)
        from freetan.analysis import _huang_v_array

        vp = _huang_v_array(p, xs.copy())
        vm = _huang_v_array(p, -xs)
        fp = np.where(vp > 0, vp / (np.pi * (xs**2 + vp**2)), 0.0)
        fm = np.where(vm > 0, vm / (np.pi * (xs**2 + vm**2)), 0.0)
        assert float(np.max(np.abs(fp - fm))) < 1e-8
        rho = analysis.spectral_radius(p).rho
        assert grid.support_edges[1] <= rho + 1e-3


def test_criterion_09_classical_counterpart():
    with criterion(9, "classical cumulants equal tangent cumulants"):
        tangent = laws.tangent_law_cumulants(16)
        closed = laws.bp_classical_cumulants(8)
        assert closed == [tangent[2 * k - 1] for k in range(1, 9)]
        # truncated direct sums approach the closed values with
        # 1/K^(2k-1)-type tails
        for k in (1, 2, 3):
            target = float(closed[k - 1])
            errs = [
                abs(laws.bp_classical_cumulant_direct(k, n_terms) - target)
                for n_terms in (100, 200, 400)
            ]
            assert errs[0] > errs[1] > errs[2]
            rate = 2 ** (2 * k - 1)
            assert errs[0] / max(errs[1], 1e-300) == pytest.approx(rate, rel=0.3)
            assert errs[0] * (2 * 100 - 1) ** (2 * k - 1) < 10.0


def test_criterion_10_trace_method_constants():
    with criterion(10, "zeta(2) deficit exact, tangent number approximant"):
        n = 1000
        zeta_hat = spectra.trace_method_constants(n, 1)["zeta2k"]
        deviation = 1.0 - zeta_hat / (math.pi**2 / 6.0)
        assert abs(deviation - 1.0 / n) < 1e-10
        t3_hat = spectra.trace_method_constants(n, 2)["t2k1"]
        assert abs(t3_hat - 2.0) / 2.0 < 0.01


def test_criterion_11_random_matrices():
    with criterion(11, "GUE moments, pairing sums vs MC, model spectra", 300.0):
        # GUE normalized m2, m4 at N = 500 within 5%
        cfg = randmat.SimConfig(N=500, samples=100, seed=20260809)
        orders, means, _ = randmat.gue_moment_estimates(cfg, (2, 4))
        assert abs(means[0] - 1.0) < 0.05
        assert abs(means[1] - 2.0) < 0.05 * 2.0
        # exact pairing sums vs Monte Carlo, m <= 6, N in {3, 10}
        patterns = [(1, 0), (1, 1), (1, 0, 1, 0), (1, 0, 1, 0, 1, 0)]
        seed = 1000
        for n in (3, 10):
            dmats = {
                "identity": np.eye(n),
                "scaled-diag": np.diag(np.arange(1.0, n + 1)) / n,
                "commutator": spectra.build(spectra.StructuredMatrixSpec(n, 0.0, 1j)) / n,
            }
            for d in dmats.values():
                for q in patterns:
                    exact = randmat.pairing_expected_moment(d, q)
                    mc, se = randmat.mc_product_moment(d, q, 30000, seed)
                    seed += 1
                    assert abs(mc - exact) <= 3 * se + 1e-12
        # tangent-configuration model at M = N = 200, 20 samples
        n = 200
        a_m = spectra.build(spectra.StructuredMatrixSpec(n, 0.0, 1j))
        wcfg = randmat.SimConfig(N=n, M=n, samples=20, seed=777)
        spec = randmat.simulate_wishart_model(a_m, wcfg)
        limits = laws.moments_of_limit(laws.LawParams.tangent(), 4)
        assert abs(spec.normalized_moment(2) - float(limits[1])) < 0.05 * float(limits[1])
        assert abs(spec.normalized_moment(4) - float(limits[3])) < 0.05 * float(limits[3])
