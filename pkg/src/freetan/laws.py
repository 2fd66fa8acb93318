"""The tangent-family limit laws and their transforms.

A law is parameterized by (a, b) on the upper unit half-circle
(a^2 + b^2 = 1, b > 0), equivalently by the angle alpha = arccot(a/b) in
(0, pi).  Its R-transform is

    R(z) = tan(b z) / (b - a tan(b z)) = sin(b z) / sin(alpha - b z),

the free cumulants are K_1 = 0 and, for r >= 2,

    K_r = b^r P_{r-1}(a/b) / (r-1)!
        = b^(r-2) U_{r-1}(a/b) / (r-1)!          (U_n(x) = T_n(x)/x)
        = (-1)^(r-1) b^r cot^(r-1)(alpha) / (r-1)!

with P_n the derivative polynomials and T_n the tangent polynomials.  The
three evaluation routes are computed independently and must agree; they
are exact rationals whenever a and b are themselves rational.

Note on the printed one-line form: the commonly displayed chained formula
"b^(r-1) T_r(a/b)/r!" carries an index shift relative to the coefficient
sequence of R; the forms above are the ones consistent with
R(z) = sum_r K_r z^(r-1), e.g. they give (0, 1, 0, 1/3, 0, 2/15, ...) for
a = 0, b = 1.

Special cases: a = 0 is the tangent law (R = tan z); the half-scaled
mixed commutator/anticommutator law ("zigzag law") has
R(z) = (tan z + sec z - 1)/2 and cumulants E_{r-1} / (2 (r-1)!).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .combinatorics import (
    bernoulli,
    derivative_polynomial,
    tangent_numbers,
    tangent_polynomial,
    zigzag_numbers,
)
from .exceptions import ConsistencyError, PoleError
from .partitions import moments_from_cumulants
from .spectra import StructuredMatrixSpec

POLE_TOLERANCE = 1e-8

__all__ = [
    "LawParams",
    "LimitCumulants",
    "bp_characteristic_function",
    "bp_classical_cumulant_direct",
    "bp_classical_cumulants",
    "finite_n_cumulants",
    "finite_n_r_transform",
    "limit_cumulants",
    "marchenko_pastur_limit_check",
    "moment_generating_limit",
    "moments_of_limit",
    "r_transform",
    "tangent_law_cumulants",
    "zigzag_law_cumulants",
]


@dataclass(frozen=True)
class LawParams:
    """Point (a, b) on the unit circle with b > 0.

    ``exact_a``/``exact_b`` carry the rational values when the point is
    exactly rational (then cumulants are exact); they are None otherwise.
    """

    a: float
    b: float
    exact_a: Fraction | None = None
    exact_b: Fraction | None = None

    def __post_init__(self):
        if not self.b > 0:
            raise ValueError("b must be positive")
        if abs(self.a**2 + self.b**2 - 1.0) > 1e-12:
            raise ValueError("(a, b) must satisfy a^2 + b^2 = 1")
        if (self.exact_a is None) != (self.exact_b is None):
            raise ValueError("exact_a and exact_b must be given together")
        if self.exact_a is not None:
            if self.exact_a**2 + self.exact_b**2 != 1:
                raise ValueError("exact parameters must satisfy a^2 + b^2 = 1")

    @classmethod
    def from_rational(cls, a, b):
        a, b = Fraction(a), Fraction(b)
        return cls(float(a), float(b), a, b)

    @classmethod
    def from_angle(cls, alpha):
        if not 0.0 < alpha < math.pi:
            raise ValueError("alpha must lie in (0, pi)")
        return cls(math.cos(alpha), math.sin(alpha))

    @classmethod
    def tangent(cls):
        return cls.from_rational(0, 1)

    @property
    def alpha(self):
        """arccot(a/b) in (0, pi)."""
        return math.atan2(self.b, self.a)

    @property
    def w(self):
        return complex(self.a, self.b)

    def matrix_spec(self, n):
        """The size-n coefficient matrix of the underlying quadratic form."""
        return StructuredMatrixSpec(n, 0.0, self.w)

    def pole_locations(self, k_range):
        """Real poles of the R-transform: (alpha + k*pi)/b for k in k_range."""
        return [(self.alpha + k * math.pi) / self.b for k in k_range]


def _r_transform_raw(params, z):
    """sin(bz)/sin(alpha - bz); no pole guard (density code handles poles)."""
    bz = params.b * complex(z)
    den = params.b * cmath.cos(bz) - params.a * cmath.sin(bz)
    return cmath.sin(bz) / den


def _nearest_pole(params, z):
    k = round((params.b * complex(z).real - params.alpha) / math.pi)
    return (params.alpha + k * math.pi) / params.b


def r_transform(params, z):
    """R(z) = tan(bz)/(b - a tan(bz)); raises PoleError near a pole."""
    bz = params.b * complex(z)
    den = params.b * cmath.cos(bz) - params.a * cmath.sin(bz)
    if abs(den) < POLE_TOLERANCE:
        raise PoleError(
            f"R-transform pole near z={z}", nearest_pole=_nearest_pole(params, z)
        )
    return cmath.sin(bz) / den


def moment_generating_limit(params, z):
    """Nonnormalized-trace moment generating function 1 + z R(z)."""
    return 1.0 + complex(z) * r_transform(params, z)


# ---------------------------------------------------------------------------
# limit cumulants, three routes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LimitCumulants:
    """Cumulants K_1..K_r of the limit law.

    ``values`` are floats, ``exact[r-1]`` the Fraction when the parameters
    are exact rationals (else None), ``routes`` the per-entry evaluation
    provenance.
    """

    params: LawParams
    values: tuple
    exact: tuple
    routes: tuple

    def __len__(self):
        return len(self.values)


def _u_polynomial_eval(n, x):
    """U_n(x) = T_n(x)/x = sum_k T(n,k) x^(k-1), evaluated via Horner."""
    coeffs = tangent_polynomial(n).coeffs[1:]  # drop the zero constant term
    acc = 0 * x
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def limit_cumulants(params, r_max):
    """K_1..K_{r_max} with the three formula routes cross-checked.

    The polynomial routes never use numerical differentiation: the
    (r-1)-st cotangent derivative is (-1)^(r-1) P_{r-1}(cot alpha) with
    exact integer polynomials.  Disagreement beyond 1e-10 raises
    ConsistencyError.
    """
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    a, b = params.a, params.b
    x = a / b
    cot_alpha = math.cos(params.alpha) / math.sin(params.alpha)
    values = [0.0]
    exact = [Fraction(0) if params.exact_a is not None else None]
    routes = [("zero-diagonal",)]
    for r in range(2, r_max + 1):
        fact = factorial(r - 1)
        p_poly = derivative_polynomial(r - 1)
        k_p = b**r * p_poly(x) / fact
        k_t = b ** (r - 2) * _u_polynomial_eval(r - 1, x) / fact
        # cot^{(r-1)}(alpha) = (-1)^(r-1) P_{r-1}(cot alpha)
        k_cot = (-1) ** (r - 1) * b**r * ((-1) ** (r - 1) * p_poly(cot_alpha)) / fact
        scale = max(1.0, abs(k_p))
        if abs(k_p - k_t) > 1e-10 * scale or abs(k_p - k_cot) > 1e-10 * scale:
            raise ConsistencyError(
                f"cumulant formula routes disagree at r={r}: "
                f"P-route {k_p}, T-route {k_t}, cot-route {k_cot}"
            )
        values.append(k_p)
        routes.append(("derivative-poly", "tangent-poly", "cot-derivative"))
        if params.exact_a is not None:
            ea, eb = params.exact_a, params.exact_b
            ex = ea / eb
            k_exact = eb**r * Fraction(p_poly(ex), fact)
            k_exact_t = eb ** (r - 2) * Fraction(_u_polynomial_eval(r - 1, ex), fact)
            if k_exact != k_exact_t:
                raise ConsistencyError(
                    f"exact cumulant routes disagree at r={r}: "
                    f"{k_exact} != {k_exact_t}"
                )
            exact.append(k_exact)
        else:
            exact.append(None)
    return LimitCumulants(params, tuple(values), tuple(exact), tuple(routes))


def tangent_law_cumulants(r_max):
    """Exact cumulants (0, 1, 0, 1/3, 0, 2/15, ...) of the a=0 law,
    K_{2m} = T_{2m-1}/(2m-1)!."""
    tnums = tangent_numbers(max(1, (r_max + 1) // 2))
    out = []
    for r in range(1, r_max + 1):
        if r % 2:
            out.append(Fraction(0))
        else:
            out.append(Fraction(tnums[r // 2 - 1], factorial(r - 1)))
    return out


def zigzag_law_cumulants(r_max):
    """Exact cumulants of the half-scaled mixed law: K_1 = 0 and
    K_r = E_{r-1}/(2 (r-1)!) for r >= 2."""
    zz = zigzag_numbers(max(0, r_max - 1))
    out = [Fraction(0)]
    for r in range(2, r_max + 1):
        out.append(Fraction(zz[r - 1], 2 * factorial(r - 1)))
    return out


def moments_of_limit(params, n_max):
    """Moments of the limit law via the noncrossing-partition transform."""
    cums = limit_cumulants(params, n_max)
    if all(e is not None for e in cums.exact):
        return moments_from_cumulants(list(cums.exact), n_max)
    return moments_from_cumulants(list(cums.values), n_max)


# ---------------------------------------------------------------------------
# pre-limit transform of the quadratic form
# ---------------------------------------------------------------------------

def finite_n_r_transform(params, n, z):
    """R-transform of the size-n quadratic form, in closed form:

    R_n(z) = -[(1+z conj(w)/n)^(n-1) - (1+z w/n)^(n-1)]
             / [w (1+z conj(w)/n)^n - conj(w) (1+z w/n)^n],
    w = a + ib.
    """
    w = params.w
    zb = complex(z) * w.conjugate() / n
    zw = complex(z) * w / n
    den = w * (1 + zb) ** n - w.conjugate() * (1 + zw) ** n
    if abs(den) < POLE_TOLERANCE * max(abs(w * (1 + zb) ** n), 1.0):
        raise PoleError(f"finite-n transform pole near z={z}")
    num = -((1 + zb) ** (n - 1) - (1 + zw) ** (n - 1))
    return num / den


def finite_n_cumulants(params, n, r_max):
    """Series coefficients K_r(Q_n) = [z^(r-1)] R_n(z), by expanding the
    binomial numerator/denominator and dividing the truncated series."""
    w = params.w
    order = r_max - 1
    wp = [1.0 + 0.0j]  # powers of w by repeated multiplication
    wq = [1.0 + 0.0j]
    for _ in range(max(order, 1)):
        wp.append(wp[-1] * w)
        wq.append(wq[-1] * w.conjugate())
    num = [
        -(comb(n - 1, j) / float(n) ** j) * (wq[j] - wp[j])
        for j in range(min(order, n - 1) + 1)
    ]
    num += [0.0j] * (order + 1 - len(num))
    den = [
        (comb(n, j) / float(n) ** j) * (w * wq[j] - w.conjugate() * wp[j])
        for j in range(min(order, n) + 1)
    ]
    den += [0.0j] * (order + 1 - len(den))
    quot = [0.0j] * (order + 1)
    for k in range(order + 1):
        acc = num[k]
        for j in range(1, k + 1):
            acc -= den[j] * quot[k - j]
        quot[k] = acc / den[0]
    return [q.real for q in quot]


# ---------------------------------------------------------------------------
# degenerations and the classical counterpart
# ---------------------------------------------------------------------------

def marchenko_pastur_limit_check(b_small, z):
    """(R-transform at (sqrt(1-b^2), b), free-Poisson R-transform z/(1-z)).

    The difference is O(b^2); useful b values are small (<= 0.1), and |z|
    must stay away from the z = 1 pole.
    """
    if not 0.0 < b_small <= 0.1:
        raise ValueError("b_small must lie in (0, 0.1]")
    if abs(complex(z)) > 0.9:
        raise ValueError("|z| must stay below 0.9, away from the z=1 pole")
    params = LawParams(math.sqrt(1.0 - b_small**2), b_small)
    general = r_transform(params, z)
    mp = complex(z) / (1.0 - complex(z))
    return general, mp


def bp_classical_cumulants(k_max):
    """Even classical cumulants c_2, c_4, ..., c_{2k_max} of the classical
    counterpart law (scaled Skellam series), as exact rationals:

    c_{2k} = (-1)^(k+1) (16^k - 4^k) B_{2k} / (2k)!
           = 2 (2/pi)^(2k) (1 - 4^(-k)) zeta(2k).

    Odd classical cumulants vanish (the law is symmetric).  These coincide
    with the even cumulants of the tangent limit law.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    out = []
    for k in range(1, k_max + 1):
        c = Fraction((-1) ** (k + 1) * (16**k - 4**k), factorial(2 * k)) * bernoulli(k)
        out.append(c)
    return out


def bp_classical_cumulant_direct(k, n_terms, tol=None):
    """Direct truncated sum c_{2k} = sum_{n odd} 2 (2/(n pi))^(2k).

    The tail after N = 2*n_terms - 1 is below (2/pi)^(2k) N^(1-2k)/(2k-1);
    if ``tol`` is given and the bound exceeds it, the truncation depth is
    rejected.
    """
    if k < 1 or n_terms < 1:
        raise ValueError("need k >= 1 and n_terms >= 1")
    biggest_n = 2 * n_terms - 1
    tail_bound = (2.0 / math.pi) ** (2 * k) * biggest_n ** (1 - 2 * k) / (2 * k - 1)
    if tol is not None and tail_bound > tol:
        raise ValueError(
            f"tail bound {tail_bound:g} exceeds tol={tol:g}; increase n_terms"
        )
    acc = 0.0
    for n in range(biggest_n, 0, -2):  # ascending magnitude for stable summation
        acc += 2.0 * (2.0 / (n * math.pi)) ** (2 * k)
    return acc


def bp_characteristic_function(t, n_terms):
    """Characteristic function of the classical counterpart, truncated to
    the first ``n_terms`` odd-index summands of independent scaled
    symmetric Skellam variables."""
    acc = 0.0
    for n in range(1, 2 * n_terms, 2):
        acc += math.cos(2.0 * t / (math.pi * n)) - 1.0
    return math.exp(2.0 * acc)
