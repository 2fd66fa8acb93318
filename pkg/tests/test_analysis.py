"""Spectral radius, Levy measure and density reconstruction tests.

Independent oracles: bisection on y = tanh(1/y) for the boundary height
at the origin, golden-section minimization for the radius, the closed
Cauchy transform of the semicircle for the quadrature, and the cumulant
route for density moments.
"""

import math
from types import SimpleNamespace

import numpy as np
import pytest

from freetan.analysis import (
    cauchy_transform_from_density,
    density_grid,
    dottie,
    huang_v,
    levy_atom_mass_check,
    levy_atoms,
    levy_cumulant_transform,
    spectral_radius,
    spectral_radius_by_minimization,
)
from freetan.exceptions import PoleError
from freetan.laws import LawParams, moments_of_limit, r_transform

TANGENT = LawParams.tangent()
RHO_TANGENT = 2.2644374158937358461
DOTTIE_REF = 0.7390851332


class TestFixedPoints:
    def test_dottie_digits(self):
        u = dottie(1e-14)
        assert abs(u - DOTTIE_REF) < 1e-9
        assert abs(u - math.cos(u)) < 1e-12

    def test_dottie_sin_relation(self):
        u = dottie(1e-14)
        assert math.sqrt(1 - u * u) == pytest.approx(math.sin(u), abs=1e-12)

    def test_radius_at_right_angle(self):
        res = spectral_radius(LawParams.from_angle(math.pi / 2))
        assert abs(res.rho - RHO_TANGENT) < 1e-10
        assert res.u == pytest.approx(dottie(1e-14), abs=1e-12)
        assert res.residual < 1e-12

    def test_radius_closed_vs_minimized(self):
        for alpha in (math.pi / 6, math.pi / 4, math.pi / 3, math.pi / 2, 3 * math.pi / 4):
            p = LawParams.from_angle(alpha)
            assert abs(spectral_radius(p).rho - spectral_radius_by_minimization(p)) < 1e-8

    def test_residuals(self):
        for alpha in (0.4, 1.2, 2.0, 2.8):
            res = spectral_radius(LawParams.from_angle(alpha))
            assert res.residual < 1e-12
            assert 0.0 < res.u < alpha


class TestLevyAtoms:
    def test_tangent_locations(self):
        lm = levy_atoms(TANGENT, 3)
        locs = sorted((x for x, _ in lm.atoms), reverse=True)
        assert locs[0] == pytest.approx(2 / math.pi)
        # symmetric atom set
        assert sorted(-x for x, _ in lm.atoms) == pytest.approx(
            sorted(x for x, _ in lm.atoms)
        )

    def test_masses_are_one(self):
        lm = levy_atoms(TANGENT, 4)
        assert all(m == 1.0 for _, m in lm.atoms)

    def test_sorted_strictly_decreasing(self):
        lm = levy_atoms(LawParams.from_angle(math.pi / 3), 5)
        mags = [abs(x) for x, _ in lm.atoms]
        assert all(mags[i] > mags[i + 1] for i in range(len(mags) - 1))
        assert all(x != 0 for x, _ in lm.atoms)

    def test_general_formula_reduces_at_a_zero(self):
        lm = levy_atoms(TANGENT, 4)
        expected = sorted(
            (2 / (n * math.pi) for n in (-7, -5, -3, -1, 1, 3, 5, 7)), key=abs,
            reverse=True,
        )
        assert [x for x, _ in lm.atoms] == pytest.approx(expected)

    def test_mass_checks_monotone_and_extrapolated(self):
        lm = levy_atoms(TANGENT, 3)
        for loc, _ in lm.atoms[:3]:
            raw = [levy_atom_mass_check(TANGENT, loc, (e,)) for e in (1e-2, 1e-3, 1e-4)]
            errs = [abs(r - 1.0) for r in raw]
            assert errs[0] > errs[1] > errs[2]
            assert abs(levy_atom_mass_check(TANGENT, loc) - 1.0) < 1e-3

    def test_general_alpha_masses(self):
        p = LawParams.from_angle(math.pi / 3)
        for loc, _ in levy_atoms(p, 2).atoms[:2]:
            assert abs(levy_atom_mass_check(p, loc) - 1.0) < 1e-3


class TestLevyCumulantTransform:
    def test_zero(self):
        assert levy_cumulant_transform(TANGENT, 0.0, 50) == 0.0

    def test_converges_to_z_tan(self):
        for z in (0.3, 0.7, 1.0):
            for k in (100, 1000):
                err = abs(levy_cumulant_transform(TANGENT, z, k) - z * math.tan(z))
                assert err <= 8 * z**3 / (math.pi**2 * k) * 1.25

    def test_tail_scaling(self):
        e10 = abs(levy_cumulant_transform(TANGENT, 1.0, 10) - math.tan(1.0))
        e100 = abs(levy_cumulant_transform(TANGENT, 1.0, 100) - math.tan(1.0))
        assert e10 / e100 == pytest.approx(10.0, rel=0.1)

    def test_general_alpha(self):
        p = LawParams.from_angle(math.pi / 3)
        z = 0.8
        target = z * r_transform(p, z)
        got = levy_cumulant_transform(p, z, 2000)
        assert abs(got - target) < 1e-3

    def test_pole(self):
        with pytest.raises(PoleError):
            levy_cumulant_transform(TANGENT, math.pi / 2, 100)


class TestHuangV:
    def test_origin_against_tanh_oracle(self):
        lo, hi = 0.5, 1.5
        for _ in range(100):
            mid = (lo + hi) / 2
            if mid - math.tanh(1 / mid) > 0:
                hi = mid
            else:
                lo = mid
        assert huang_v(TANGENT, 0.0) == pytest.approx((lo + hi) / 2, abs=1e-9)

    def test_far_out_is_zero(self):
        assert huang_v(TANGENT, 50.0) == 0.0
        assert huang_v(TANGENT, -7.0) == 0.0

    def test_bracket_postcondition(self):
        for x in (0.0, 0.5, 1.0, 1.3):
            v = huang_v(TANGENT, x)
            assert v > 0
            from freetan.analysis import _im_f_inverse

            assert _im_f_inverse(TANGENT, np.array([x]), np.array([v * (1 + 1e-6)]))[0] > 0
            assert _im_f_inverse(TANGENT, np.array([x]), np.array([v * (1 - 1e-6)]))[0] < 0

    def test_even_in_x_for_tangent(self):
        for x in (0.3, 0.9, 1.2):
            assert huang_v(TANGENT, x) == pytest.approx(huang_v(TANGENT, -x), abs=1e-11)


@pytest.fixture(scope="module")
def grid():
    return density_grid(TANGENT, n_points=1201)


class TestDensityGrid:
    def test_mass(self, grid):
        assert abs(grid.mass - 1.0) < 1e-5

    def test_density_at_center(self, grid):
        v0 = huang_v(TANGENT, 0.0)
        idx = np.argmin(np.abs(grid.psi))
        assert grid.f[idx] == pytest.approx(1 / (math.pi * v0), abs=1e-6)

    def test_nonnegative_and_monotone(self, grid):
        assert np.all(grid.f >= 0)
        assert np.all(np.diff(grid.psi) > 0)

    def test_even_density(self, grid):
        xs = np.linspace(0.0, grid.x_param[-1] * 0.999, 40)
        from freetan.analysis import _huang_v_array

        vp = _huang_v_array(TANGENT, xs.copy())
        vm = _huang_v_array(TANGENT, -xs)
        fp = np.where(vp > 0, vp / (np.pi * (xs**2 + vp**2)), 0.0)
        fm = np.where(vm > 0, vm / (np.pi * (xs**2 + vm**2)), 0.0)
        assert np.max(np.abs(fp - fm)) < 1e-8

    def test_moments_match_cumulant_route(self, grid):
        m = moments_of_limit(TANGENT, 4)
        assert abs(grid.moment(2) - float(m[1])) < 1e-4
        assert abs(grid.moment(4) - float(m[3])) < 1e-3
        assert abs(grid.moment(1)) < 1e-8
        assert abs(grid.moment(3)) < 1e-8

    def test_support_edge_vs_radius(self, grid):
        rho = spectral_radius(TANGENT).rho
        assert grid.support_edges[1] <= rho + 1e-3
        assert grid.support_edges[1] == pytest.approx(rho, abs=1e-6)
        assert grid.support_edges[0] == pytest.approx(-rho, abs=1e-6)

    def test_asymmetric_law(self):
        p = LawParams.from_angle(math.pi / 3)
        grid = density_grid(p, n_points=801)
        assert abs(grid.mass - 1.0) < 1e-4
        m = moments_of_limit(p, 2)
        assert abs(grid.moment(2) - float(m[1])) < 1e-3
        # positive edge bounded by the spectral radius
        rho = spectral_radius(p).rho
        assert grid.support_edges[1] <= rho + 1e-3


class TestCauchyTransform:
    def _semicircle_grid(self):
        psi = np.linspace(-2.0, 2.0, 20001)
        f = np.sqrt(np.maximum(4.0 - psi**2, 0.0)) / (2 * math.pi)
        return SimpleNamespace(psi=psi, f=f)

    def test_semicircle_closed_form(self):
        grid = self._semicircle_grid()
        for z in (2j, 1 + 1.5j, -0.7 + 2j):
            closed = (z - z * np.sqrt(1 - 4 / z**2)) / 2.0
            got = cauchy_transform_from_density(grid, z)
            assert got == pytest.approx(closed, abs=5e-5)
            assert got.imag <= 0

    def test_herglotz_sign(self):
        grid = density_grid(TANGENT, n_points=401)
        for x in (-1.5, 0.0, 2.0):
            assert cauchy_transform_from_density(grid, complex(x, 0.5)).imag <= 0

    def test_total_mass_asymptotics(self):
        grid = density_grid(TANGENT, n_points=401)
        for y in (50.0, 200.0):
            val = cauchy_transform_from_density(grid, complex(0, y)) * complex(0, y)
            assert val.real == pytest.approx(1.0, abs=2e-3)

    def test_requires_upper_half_plane(self):
        grid = self._semicircle_grid()
        with pytest.raises(ValueError):
            cauchy_transform_from_density(grid, 1 - 1j)

    def test_roundtrip_through_f_inverse(self):
        # Finv(1/G(z)) should return z up to quadrature error
        grid = density_grid(TANGENT, n_points=1201)
        for z in (0.3 + 1.2j, -0.8 + 1.5j):
            g = cauchy_transform_from_density(grid, z)
            w = 1.0 / g
            back = w + r_transform(TANGENT, 1.0 / w)
            assert abs(back - z) < 1e-4
