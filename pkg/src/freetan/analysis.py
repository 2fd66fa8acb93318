"""Analytic structure of the limit laws.

Covers the spectral radius (fixed-point and direct-minimization routes),
the purely atomic free Levy measure with numerical mass verification via
nontangential limits, the truncated Levy-Khintchine sum, and density
reconstruction through the boundary-value inversion

    v(x)   = inf { y > 0 : Im Finv(x + iy) > 0 },
    psi(x) = Finv(x + i v(x)),
    density(psi(x)) = v(x) / (pi (x^2 + v(x)^2)),

where Finv(z) = z + R(1/z) is the inverse reciprocal Cauchy transform.
The map psi is a homeomorphism of the real line; the grid code checks the
monotonicity it relies on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import NumericError, PoleError
from .laws import LawParams, r_transform

__all__ = [
    "DensityGrid",
    "LevyMeasure",
    "RadiusResult",
    "cauchy_transform_from_density",
    "density_grid",
    "dottie",
    "golden_section_minimize",
    "huang_v",
    "levy_atom_mass_check",
    "levy_atoms",
    "levy_cumulant_transform",
    "spectral_radius",
    "spectral_radius_by_minimization",
]


# ---------------------------------------------------------------------------
# fixed points and spectral radii
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RadiusResult:
    u: float
    rho: float
    iterations: int
    residual: float


def dottie(tol=1e-14):
    """The fixed point of cos on [0, 1], by Newton with bisection fallback."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    u, it = _newton_bisect(lambda x: x - math.cos(x),
                           lambda x: 1.0 + math.sin(x), 0.0, 1.0, tol)
    return u


def _newton_bisect(f, fprime, lo, hi, tol, max_iter=200):
    """Root of increasing f on [lo, hi]: Newton steps, bisection safeguard."""
    x = 0.5 * (lo + hi)
    for it in range(1, max_iter + 1):
        fx = f(x)
        if fx > 0:
            hi = x
        else:
            lo = x
        d = fprime(x)
        step_ok = d > 0
        if step_ok:
            x_new = x - fx / d
            step_ok = lo < x_new < hi
        if not step_ok:
            x_new = 0.5 * (lo + hi)
        if abs(x_new - x) < tol:
            return x_new, it
        x = x_new
    raise NumericError("fixed-point iteration did not converge")


def spectral_radius(params, tol=1e-14):
    """Spectral radius of the limit law, from the fixed point
    u = sin(alpha - u) on (0, alpha): rho = (sin(alpha) + sin(u)) / u.

    alpha = pi/2 reduces to the iterated-cosine (Dottie) fixed point.
    """
    alpha = params.alpha
    u, it = _newton_bisect(
        lambda x: x - math.sin(alpha - x),
        lambda x: 1.0 + math.cos(alpha - x),
        0.0,
        alpha,
        tol,
    )
    rho = (math.sin(alpha) + math.sin(u)) / u
    return RadiusResult(u, rho, it, abs(u - math.sin(alpha - u)))


def golden_section_minimize(f, lo, hi, tol=1e-12, max_iter=300):
    """Minimize a unimodal function on [lo, hi]; returns (x_min, f(x_min))."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if b - a < tol:
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def spectral_radius_by_minimization(params, tol=1e-12):
    """rho as the direct minimum of K(t) = 1/t + sin(bt)/sin(alpha - bt)
    over t > 0; independent cross-check of the fixed-point route."""
    alpha, b = params.alpha, params.b

    def objective(t):
        return 1.0 / t + math.sin(b * t) / math.sin(alpha - b * t)

    t_max = alpha / b
    _, val = golden_section_minimize(objective, 1e-9, t_max * (1 - 1e-12), tol)
    return val


# ---------------------------------------------------------------------------
# Levy measure
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LevyMeasure:
    """Atoms (location, mass), sorted by decreasing |location|."""

    atoms: tuple
    truncation_index: int
    mass_checks: tuple | None = None


def _atom_locations(params, k_max):
    a, b = params.a, params.b
    theta0 = math.pi / 2.0 if a == 0 else math.atan(b / a)
    locs = [b / (theta0 + k * math.pi) for k in range(-k_max, k_max + 1)]
    locs.sort(key=abs, reverse=True)
    return locs[: 2 * k_max]  # keep the 2*k_max outermost atoms


def levy_atoms(params, k_max, verify=False, eps_seq=(1e-2, 1e-3, 1e-4)):
    """Free Levy measure of the limit law: unit atoms at
    b / (arctan(b/a) + k pi), k integer (a = 0 gives 2b/((2k+1) pi)).

    The law has no Gaussian part and no continuous Levy component.  With
    ``verify=True`` each atom mass is re-derived numerically from the
    nontangential limit of the Voiculescu transform.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    locs = _atom_locations(params, k_max)
    checks = None
    if verify:
        checks = tuple(levy_atom_mass_check(params, x, eps_seq) for x in locs)
    return LevyMeasure(tuple((x, 1.0) for x in locs), k_max, checks)


def levy_atom_mass_check(params, location, eps_seq=(1e-2, 1e-3, 1e-4)):
    """Numerical mass of the atom at ``location``:
    (1/x^2) lim_{eps->0} i eps phi(x + i eps) with phi(z) = R(1/z),
    extrapolated in eps (two-term Richardson) since the raw limit
    converges slowly."""
    x = location
    vals = []
    for eps in eps_seq:
        z = complex(x, eps)
        phi = r_transform(params, 1.0 / z)
        vals.append((1j * eps * phi).real / x**2)
    if len(vals) == 1:
        return vals[0]
    e1, e2 = eps_seq[-2], eps_seq[-1]
    m1, m2 = vals[-2], vals[-1]
    # residual is O(eps^2); eliminate the leading term
    return (e1**2 * m2 - e2**2 * m1) / (e1**2 - e2**2)


def levy_cumulant_transform(params, z, k_max):
    """Truncated free cumulant transform from the Levy representation:
    C(z) = sum_atoms (xz)^2 / (1 - xz); converges to z R(z) with an
    O(1/k_max) tail."""
    z = complex(z)
    locs = _atom_locations(params, k_max)
    acc = 0.0j
    for x in reversed(locs):  # ascending |x|: small terms first
        den = 1.0 - x * z
        if abs(den) < 1e-8:
            raise PoleError(
                f"Levy sum pole near z={z}", nearest_pole=1.0 / x
            )
        acc += (x * z) ** 2 / den
    return acc


# ---------------------------------------------------------------------------
# density reconstruction
# ---------------------------------------------------------------------------

def _tan_stable(u):
    """Complex tangent, overflow-safe for large |Im u| (saturates to +-i)."""
    ur = np.real(u)
    ui = np.clip(np.imag(u), -300.0, 300.0)
    den = np.cos(2.0 * ur) + np.cosh(2.0 * ui)
    return (np.sin(2.0 * ur) + 1j * np.sinh(2.0 * ui)) / den


def _r_vec(params, zeta):
    """Vectorized R-transform, no pole guard."""
    t = _tan_stable(params.b * zeta)
    return t / (params.b - params.a * t)


def _im_f_inverse(params, x, y):
    """Im Finv(x + iy) with Finv(z) = z + R(1/z); vectorized."""
    z = x + 1j * y
    return y + np.imag(_r_vec(params, 1.0 / z))


def huang_v(params, x, tol=1e-10, y_cap=1e9):
    """Boundary height v(x) = inf{y > 0 : Im Finv(x+iy) > 0}.

    The positivity set is an upward interval, so a doubling bracket plus
    bisection finds its lower endpoint; if Im Finv stays positive all the
    way down, the infimum is 0 (the point lies outside the closed support
    preimage).
    """
    out = _huang_v_array(params, np.atleast_1d(np.asarray(x, dtype=float)), tol, y_cap)
    return float(out[0]) if np.isscalar(x) or np.ndim(x) == 0 else out


def _huang_v_array(params, xs, tol=1e-10, y_cap=1e9):
    y_hi = np.full_like(xs, 1.0)
    # grow until Im Finv > 0 everywhere
    for _ in range(64):
        bad = _im_f_inverse(params, xs, y_hi) <= 0.0
        if not bad.any():
            break
        y_hi[bad] *= 2.0
        if np.any(y_hi > y_cap):
            raise NumericError("no positive Im Finv found below the y cap")
    else:
        raise NumericError("bracketing failed from above")
    y_lo = y_hi / 2.0
    floor = 1e-14
    # shrink until Im Finv <= 0 (or the floor is hit -> v = 0)
    outside = np.zeros(xs.shape, dtype=bool)
    for _ in range(80):
        val = _im_f_inverse(params, xs, y_lo)
        pos = (val > 0.0) & ~outside
        if not pos.any():
            break
        y_hi[pos] = y_lo[pos]
        y_lo[pos] /= 2.0
        hit = pos & (y_lo < floor)
        outside |= hit
    v = np.zeros_like(xs)
    inside = ~outside
    lo, hi = y_lo.copy(), y_hi.copy()
    span = np.where(inside, hi - lo, 0.0)
    for _ in range(200):
        if not np.any(span > tol):
            break
        mid = 0.5 * (lo + hi)
        pos = _im_f_inverse(params, xs, mid) > 0.0
        hi = np.where(inside & pos, mid, hi)
        lo = np.where(inside & ~pos, mid, lo)
        span = np.where(inside, hi - lo, 0.0)
    v[inside] = 0.5 * (lo + hi)[inside]
    return v


@dataclass(frozen=True)
class DensityGrid:
    """Sampled absolutely-continuous density of a limit law.

    ``x_param`` is the grid in the inversion parameter domain, ``psi`` its
    image on the real line (the support axis), ``f`` the density at
    ``psi``.  ``mass`` is the trapezoid integral of f over psi.
    """

    params: LawParams
    x_param: np.ndarray
    v: np.ndarray
    psi: np.ndarray
    f: np.ndarray
    mass: float
    support_edges: tuple

    def moment(self, k):
        """k-th moment of the sampled density by trapezoid quadrature."""
        return float(np.trapezoid(self.psi**k * self.f, self.psi))


def _psi_values(params, xs, vs):
    z = xs + 1j * vs
    w = z + _r_vec(params, 1.0 / z)
    return np.real(w)


def _edge_parameter(params, x_lo, x_hi, tol=1e-12):
    """Bisect the transition of v(x) > 0 between x_lo (inside) and x_hi."""
    lo, hi = x_lo, x_hi
    for _ in range(100):
        if hi - lo < tol * max(1.0, abs(hi)):
            break
        mid = 0.5 * (lo + hi)
        if huang_v(params, mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def density_grid(params, x_range=None, n_points=2001, tol=1e-10,
                 max_refine_passes=24, max_points=300_000):
    """Density of the limit law on an adaptively refined grid.

    The parameter grid covers exactly the region where v > 0 (located
    automatically when ``x_range`` is None); intervals are bisected until
    the psi spacing is even and the local trapezoid error estimate meets
    the mass tolerance.  Raises NumericError if psi fails to be strictly
    increasing (the homeomorphism property the inversion guarantees).
    """
    if x_range is None:
        x_hi = 1.0
        for _ in range(60):
            if huang_v(params, x_hi) == 0.0:
                break
            x_hi *= 2.0
        else:
            raise NumericError("support preimage edge not found")
        x_lo = -1.0
        for _ in range(60):
            if huang_v(params, x_lo) == 0.0:
                break
            x_lo *= 2.0
        else:
            raise NumericError("support preimage edge not found")
        edge_pos = _edge_parameter(params, x_hi / 2.0, x_hi)
        edge_neg = -_edge_parameter(
            LawParams(-params.a, params.b), -x_lo / 2.0, -x_lo
        )
        xs = np.linspace(edge_neg, edge_pos, n_points)
    else:
        xs = np.linspace(x_range[0], x_range[1], n_points)

    vs = _huang_v_array(params, xs, tol)
    psi = _psi_values(params, xs, vs)
    f = np.where(vs > 0.0, vs / (np.pi * (xs**2 + vs**2)), 0.0)

    psi_span = psi[-1] - psi[0]
    spacing_target = 4.0 * psi_span / n_points
    err_target = 2.5e-7 * max(psi_span, 1.0) / n_points
    for _ in range(max_refine_passes):
        dpsi = np.abs(np.diff(psi))
        derr = dpsi * np.abs(np.diff(f)) * 0.25
        refine = (dpsi > spacing_target) | (derr > err_target)
        if not refine.any() or xs.size + int(refine.sum()) > max_points:
            break
        mid_x = 0.5 * (xs[:-1] + xs[1:])[refine]
        mid_v = _huang_v_array(params, mid_x, tol)
        mid_psi = _psi_values(params, mid_x, mid_v)
        mid_f = np.where(mid_v > 0.0, mid_v / (np.pi * (mid_x**2 + mid_v**2)), 0.0)
        idx = np.nonzero(refine)[0] + 1
        xs = np.insert(xs, idx, mid_x)
        vs = np.insert(vs, idx, mid_v)
        psi = np.insert(psi, idx, mid_psi)
        f = np.insert(f, idx, mid_f)

    if np.any(np.diff(psi) <= 0.0):
        raise NumericError(
            "psi is not strictly increasing; refine the grid or shrink tol"
        )
    mass = float(np.trapezoid(f, psi))
    return DensityGrid(params, xs, vs, psi, f, mass, (float(psi[0]), float(psi[-1])))


def cauchy_transform_from_density(grid, z):
    """Cauchy transform of the sampled density by trapezoid quadrature;
    defined for Im z > 0 and maps there into the closed lower half plane."""
    z = complex(z)
    if z.imag <= 0:
        raise ValueError("Cauchy transform quadrature requires Im z > 0")
    values = grid.f / (z - grid.psi)
    return complex(np.trapezoid(values, grid.psi))
