"""Structured Hermitian matrices with constant diagonal/off-diagonal bands.

The family is: diagonal entries c, every upper-triangular entry w = a+bi,
every lower-triangular entry conj(w).  For b != 0 the characteristic
polynomial has the closed form

    chi_n(x) = (w (x + conj(w))^n - conj(w) (x + w)^n) / (w - conj(w))

(after shifting out c), and the eigenvalues are

    lambda_k = b * cot((alpha + k*pi)/n) - a + c,   k = 0..n-1,

with alpha = arccot(a/b) in (0, pi).  An independent cyclic complex Jacobi
eigensolver verifies the closed form, Newton-Girard identities recover the
power sums from the binomial coefficients of chi_n, and the resulting
cotangent power sums have exact evaluations in terms of arctangent,
tangent and zigzag numbers.

Index convention: all spectra and cotangent sums run over k = 0..n-1; the
same multisets are sometimes written with k = 1..n elsewhere, which is
equivalent because cot has period pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

import numpy as np

from .combinatorics import arctangent_number, tangent_numbers, zigzag_numbers
from .exceptions import DegenerateFamilyError, NumericError, ResourceLimitError
from .gaussian_rational import GaussianRational, to_gaussian_rational

__all__ = [
    "StructuredMatrixSpec",
    "anticommutator_spectrum",
    "build",
    "charpoly",
    "closed_form_eigenvalues",
    "cotangent_sum_2m",
    "cotangent_sum_2m_exact",
    "cotangent_sum_shifted",
    "cotangent_sum_shifted_exact",
    "cotangent_sum_shifted_leading",
    "exact_trace_powers",
    "float_trace_power",
    "hermitian_eigenvalues",
    "newton_power_sums",
    "trace_method_constants",
    "trace_power",
]


@dataclass(frozen=True)
class StructuredMatrixSpec:
    """Size n, diagonal value c, strict-upper-triangle value w."""

    n: int
    c: float = 0.0
    w: complex = 1j

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")

    @property
    def a(self):
        return self.w.real

    @property
    def b(self):
        return self.w.imag

    @property
    def alpha(self):
        """arccot(a/b) in (0, pi), taken for |b| (conjugation symmetry)."""
        b = abs(self.b)
        if b == 0:
            raise DegenerateFamilyError("alpha undefined for b = 0")
        return math.atan2(b, self.a)


def build(spec):
    """Dense Hermitian matrix: diag c, upper w, lower conj(w)."""
    n = spec.n
    m = np.full((n, n), complex(spec.w))
    m[np.tril_indices(n)] = np.conj(spec.w)
    np.fill_diagonal(m, spec.c)
    return m


def charpoly(spec, lam, method="closed"):
    """Characteristic polynomial det(lam*I - A) of the structured matrix.

    ``method="closed"`` evaluates the two-term closed form, ``"recurrence"``
    the three-term recurrence; both must agree (tested elsewhere).  The
    value is real; rounding residue in the imaginary part is discarded.
    """
    w = complex(spec.w)
    if w.imag == 0:
        raise DegenerateFamilyError(
            "b = 0 has no two-term closed form; use anticommutator_spectrum"
        )
    x = lam - spec.c
    if method == "closed":
        val = (w * (x + w.conjugate()) ** spec.n - w.conjugate() * (x + w) ** spec.n) / (
            w - w.conjugate()
        )
        return val.real
    if method == "recurrence":
        twoa = 2.0 * w.real
        mod2 = abs(w) ** 2
        prev, cur = 1.0, x
        for _ in range(2, spec.n + 1):
            prev, cur = cur, (2.0 * x + twoa) * cur - (x * x + twoa * x + mod2) * prev
        return cur if spec.n >= 1 else prev
    raise ValueError(f"unknown method {method!r}")


def closed_form_eigenvalues(spec):
    """Sorted eigenvalues from the cotangent closed form.

    b < 0 is reduced to b > 0 (complex conjugation of a Hermitian matrix
    preserves the spectrum); b = 0 degenerates to the rank-one-plus-shift
    family c*I + a*(J - I) with eigenvalues c - a and c + a*(n-1).
    """
    n, c, a, b = spec.n, spec.c, spec.a, abs(spec.b)
    if b == 0:
        eigs = np.full(n, c - a)
        eigs[-1] = c + a * (n - 1)
        return np.sort(eigs)
    if n == 1:
        return np.array([float(c)])
    alpha = math.atan2(b, a)
    theta = (alpha + np.pi * np.arange(n)) / n  # strictly inside (0, pi)
    eigs = b * (np.cos(theta) / np.sin(theta)) - a + c
    return np.sort(eigs)


def anticommutator_spectrum(n):
    """Spectrum of the all-ones off-diagonal matrix (w = 1, c = 0):
    eigenvalue -1 with multiplicity n-1 and eigenvalue n-1 once."""
    if n < 1:
        raise ValueError("n must be >= 1")
    eigs = np.full(n, -1.0)
    eigs[-1] = float(n - 1)
    return eigs


def _round_robin_rounds(n):
    """Round-robin schedule: each round pairs the indices 0..n-1 into
    disjoint (p, q) pivots; the rounds together cover every pair once."""
    m = n + (n % 2)  # pad with a bye for odd n
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        pairs = []
        for i in range(m // 2):
            x, y = players[i], players[m - 1 - i]
            if x < n and y < n:
                pairs.append((min(x, y), max(x, y)))
        rounds.append(pairs)
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def hermitian_eigenvalues(h, tol=None, max_sweeps=64):
    """Eigenvalues of a dense Hermitian matrix by cyclic complex Jacobi
    rotations; independent of the closed-form route.

    Pivots are visited in round-robin rounds of disjoint index pairs, so
    each round applies commuting rotations in one vectorized step. Sweeps
    run until the off-diagonal Frobenius norm drops below ``tol`` (default
    1e-12 times the Frobenius norm of the input).
    """
    a = np.array(h, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("input must be a square matrix")
    n = a.shape[0]
    fro = float(np.linalg.norm(a))
    if tol is None:
        tol = 1e-12 * max(fro, 1.0)
    defect = float(np.max(np.abs(a - a.conj().T))) if n > 1 else 0.0
    if defect > max(tol, 1e-10 * max(fro, 1.0)):
        raise ValueError(f"matrix is not Hermitian within tolerance: {defect}")
    if n == 1:
        return np.array([a[0, 0].real])
    a = (a + a.conj().T) / 2.0
    skip = tol / (2.0 * n)
    rounds = [
        (np.array([p for p, _ in pairs]), np.array([q for _, q in pairs]))
        for pairs in _round_robin_rounds(n)
    ]
    off = fro
    for _ in range(max_sweeps):
        # off-diagonal Frobenius norm, summed entrywise (subtracting the
        # diagonal from the total norm loses ~sqrt(eps) to cancellation)
        hollow = a - np.diag(np.diag(a))
        off = float(np.linalg.norm(hollow))
        if off <= tol:
            return np.sort(np.real(np.diag(a)))
        for ps, qs in rounds:
            apq = a[ps, qs]
            g = np.abs(apq)
            active = g > skip
            if not np.any(active):
                continue
            p, q = ps[active], qs[active]
            apq, g = apq[active], g[active]
            app = a[p, p].real
            aqq = a[q, q].real
            phase = apq / g
            tau = (aqq - app) / (2.0 * g)
            t = np.sign(tau) / (np.abs(tau) + np.hypot(1.0, tau))
            t[tau == 0.0] = 1.0
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = (t * c) * phase
            # disjoint pivots: the combined rotation is A <- J^H A J with
            # J acting independently on each (p, q) plane
            colp = a[:, p]
            colq = a[:, q]
            newp = colp * c - colq * np.conj(s)
            newq = colp * s + colq * c
            a[:, p] = newp
            a[:, q] = newq
            rowp = a[p, :]
            rowq = a[q, :]
            a[p, :] = c[:, None] * rowp - s[:, None] * rowq
            a[q, :] = np.conj(s)[:, None] * rowp + c[:, None] * rowq
            a[p, q] = 0.0
            a[q, p] = 0.0
            a[p, p] = app - t * g
            a[q, q] = aqq + t * g
    raise NumericError(f"Jacobi sweep limit {max_sweeps} reached (off={off:g})")


def trace_power(spec, r):
    """Tr(A^r) from the closed-form eigenvalues."""
    if r < 1:
        raise ValueError("r must be >= 1")
    eigs = closed_form_eigenvalues(spec)
    return float(np.sum(eigs**r))


def float_trace_power(matrix, r):
    """Tr(M^r) of a dense Hermitian matrix via its eigenvalues."""
    eigs = np.linalg.eigvalsh(np.asarray(matrix, dtype=complex))
    return float(np.sum(eigs**r))


def exact_trace_powers(matrix, r_max):
    """[Tr(A^1), ..., Tr(A^r_max)] in exact complex-rational arithmetic.

    Requires entries coercible to Gaussian rationals and size <= 16; traces
    of Hermitian powers are real and returned as Fractions.
    """
    if isinstance(matrix, np.ndarray):
        raise TypeError("exact trace route expects plain nested sequences")
    a = [[to_gaussian_rational(x) for x in row] for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    if n > 16:
        raise ResourceLimitError("exact trace powers limited to size <= 16")
    traces = []
    power = a
    for _ in range(r_max):
        tr = GaussianRational(0)
        for i in range(n):
            tr = tr + power[i][i]
        if not tr.is_real:
            raise ValueError("trace of a Hermitian power must be real")
        traces.append(tr.re)
        power = _exact_matmul(power, a)
    return traces


def _exact_matmul(x, y):
    n = len(x)
    out = [[GaussianRational(0)] * n for _ in range(n)]
    for i in range(n):
        for k in range(n):
            xik = x[i][k]
            if xik == GaussianRational(0):
                continue
            row = y[k]
            for j in range(n):
                out[i][j] = out[i][j] + xik * row[j]
    return out


def newton_power_sums(spec, r_max):
    """Power sums s_1..s_r of the spectrum via Newton-Girard identities.

    The binomial coefficients of chi_n feed the recurrence
    s_r + d_1 s_{r-1} + ... + d_{r-1} s_1 + r d_r = 0; a diagonal shift c
    is folded back in afterwards with the binomial theorem.
    """
    w = complex(spec.w)
    if w.imag == 0:
        raise DegenerateFamilyError("Newton route requires b != 0")
    n = spec.n
    wbar = w.conjugate()
    denom = w - wbar
    # chi_n(x) = sum_j x^j c_j with c_n = 1; d_k = c_{n-k}
    d = [
        comb(n, n - k) * (w * wbar ** k - wbar * w**k) / denom
        for k in range(0, min(r_max, n) + 1)
    ]
    s_shift = [complex(n)]
    for r in range(1, r_max + 1):
        acc = 0j
        for k in range(1, min(r - 1, n) + 1):
            acc += d[k] * s_shift[r - k]
        if r <= n:
            acc += r * d[r]
        s_shift.append(-acc)
    if spec.c == 0:
        return [s.real for s in s_shift[1:]]
    out = []
    for r in range(1, r_max + 1):
        acc = 0j
        for j in range(r + 1):
            acc += comb(r, j) * spec.c ** (r - j) * s_shift[j]
        out.append(acc.real)
    return out


# ---------------------------------------------------------------------------
# cotangent power sums
# ---------------------------------------------------------------------------

def _cot(theta):
    return np.cos(theta) / np.sin(theta)


def cotangent_sum_2m_exact(n, m):
    """Exact value of sum_{k=0}^{n-1} cot^(2m)((2k+1) pi / (2n))."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    tnums = tangent_numbers(m)
    acc = Fraction((-1) ** m * n)
    for k in range(1, m + 1):
        a_val = arctangent_number(2 * m, 2 * k)
        if a_val:
            acc += Fraction(n ** (2 * k) * a_val * tnums[k - 1], factorial(2 * m - 1))
    return acc


def cotangent_sum_2m(n, m):
    """(direct trig sum, exact closed form) for the even cotangent sum."""
    k = np.arange(n)
    direct = float(np.sum(_cot((2 * k + 1) * np.pi / (2 * n)) ** (2 * m)))
    return direct, float(cotangent_sum_2m_exact(n, m))


def cotangent_sum_shifted_exact(n, m):
    """Exact value of sum_{k=0}^{n-1} cot^m((4k-1) pi / (4n))."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    zz = zigzag_numbers(m - 1)
    acc = Fraction((-1) ** (m // 2) * n) if m % 2 == 0 else Fraction(0)
    for k in range(1, m + 1):
        a_val = arctangent_number(m, k)
        if a_val:
            acc += Fraction((-2 * n) ** k * a_val * zz[k - 1], 2 * factorial(m - 1))
    return acc


def cotangent_sum_shifted(n, m):
    """(direct trig sum, exact closed form) for the quarter-shifted sum."""
    k = np.arange(n)
    direct = float(np.sum(_cot((4 * k - 1) * np.pi / (4 * n)) ** m))
    return direct, float(cotangent_sum_shifted_exact(n, m))


def cotangent_sum_shifted_leading(n, m):
    """Leading-order term (-2n)^m E_{m-1} / (2 (m-1)!) of the shifted sum."""
    return float(
        Fraction((-2 * n) ** m * zigzag_numbers(m - 1)[m - 1], 2 * factorial(m - 1))
    )


# ---------------------------------------------------------------------------
# trace-method approximants
# ---------------------------------------------------------------------------

def trace_method_constants(n, k):
    """Finite-n trace approximants of zeta(2k), B_{2k}, T_{2k-1} and E_k.

    Traces of the structured matrices (w = i for the first three, w = 1+i
    for the zigzag constant) are taken from the closed-form eigenvalues, so
    large n stays cheap.
    """
    if n < 2 or k < 1:
        raise ValueError("need n >= 2 and k >= 1")
    tr_tan = trace_power(StructuredMatrixSpec(n, 0.0, 1j), 2 * k)
    four_k = 4.0**k
    zeta2k = math.pi ** (2 * k) * tr_tan / (2.0 * float(n) ** (2 * k) * (four_k - 1))
    b2k = (
        factorial(2 * k)
        * tr_tan
        / ((-1.0) ** (k + 1) * four_k * (four_k - 1) * float(n) ** (2 * k))
    )
    t2k1 = factorial(2 * k - 1) * tr_tan / float(n) ** (2 * k)
    tr_zig = trace_power(StructuredMatrixSpec(n, 0.0, 1 + 1j), k + 1)
    e_k = factorial(k) * tr_zig / (2.0**k * float(n) ** (k + 1))
    return {"zeta2k": zeta2k, "b2k": b2k, "t2k1": t2k1, "e_k": e_k}
