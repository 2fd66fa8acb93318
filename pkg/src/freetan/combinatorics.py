"""Exact integer/rational combinatorics of the tangent function family.

Everything here is computed in arbitrary-precision rational arithmetic
(`fractions.Fraction`); the values feed the limit-law cumulants, the
cotangent power-sum identities and the small-instance oracles, so no
floating shortcut is taken.

Conventions
-----------
* ``tan z = sum_n T_n z^n / n!`` defines the tangent numbers
  ``T_1, T_3, T_5, ... = 1, 2, 16, 272, ...`` (even-index entries vanish).
* ``tan z + sec z = sum_n E_n z^n / n!`` defines the zigzag numbers
  ``E_0, E_1, ... = 1, 1, 1, 2, 5, 16, ...``.
* ``(arctan z)^k / k! = sum_n A(n,k) z^n / n!`` defines the (signed)
  arctangent numbers; the hyperbolic variant uses ``atanh``.
* ``tan^k z = sum_n T(n,k) z^n / n!`` defines the higher-order tangent
  numbers, collected in the tangent polynomials
  ``T_n(x) = sum_k T(n,k) x^k`` with bivariate generating function
  ``x tan z / (1 - x tan z)`` (note: some classical references expand
  ``tan z / (1 - x tan z)`` instead, which shifts the x-power by one; this
  module standardizes on the former).
* ``P_n`` are the derivative polynomials of the tangent/cotangent:
  ``P_n = (1 + x^2) * P_{n-1}'`` with ``P_0 = x``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .exceptions import ConsistencyError

DEFAULT_ORDER = 32

__all__ = [
    "DEFAULT_ORDER",
    "FormalSeries",
    "IntPolynomial",
    "arctangent_number",
    "arctanh_number",
    "bernoulli",
    "derivative_polynomial",
    "higher_tangent_number",
    "tangent_numbers",
    "tangent_polynomial",
    "zigzag_numbers",
    "zigzag_sum_identity",
]


# ---------------------------------------------------------------------------
# truncated formal power series over Fraction
# ---------------------------------------------------------------------------

class FormalSeries:
    """Truncated formal power series with exact rational coefficients.

    All arithmetic truncates at ``order``: coefficients of z^k with
    k > order are discarded, never rounded.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=DEFAULT_ORDER):
        cs = [Fraction(c) for c in coeffs[: order + 1]]
        cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self.coeffs = tuple(cs)
        self.order = order

    def __getitem__(self, k):
        return self.coeffs[k]

    def __eq__(self, other):
        return (
            isinstance(other, FormalSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:6])
        return f"FormalSeries([{head}, ...], order={self.order})"

    def __add__(self, other):
        other = self._coerce(other)
        return FormalSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], self.order
        )

    def __sub__(self, other):
        other = self._coerce(other)
        return FormalSeries(
            [a - b for a, b in zip(self.coeffs, other.coeffs)], self.order
        )

    def __neg__(self):
        return FormalSeries([-a for a in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FormalSeries([a * other for a in self.coeffs], self.order)
        other = self._coerce(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return FormalSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative series power")
        result = FormalSeries([1], self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def compose(self, inner):
        """Return self(inner); ``inner`` must have zero constant term."""
        inner = self._coerce(inner)
        if inner.coeffs[0] != 0:
            raise ValueError("composition requires inner constant term 0")
        out = FormalSeries([0], self.order)
        power = FormalSeries([1], self.order)
        for k, a in enumerate(self.coeffs):
            if a != 0:
                out = out + power * a
            if k < self.order:
                power = power * inner
        return out

    def reciprocal(self):
        """Multiplicative inverse; constant term must be nonzero."""
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("series has zero constant term")
        n = self.order
        inv = [Fraction(0)] * (n + 1)
        inv[0] = 1 / c0
        for k in range(1, n + 1):
            acc = Fraction(0)
            for j in range(1, k + 1):
                acc += self.coeffs[j] * inv[k - j]
            inv[k] = -acc / c0
        return FormalSeries(inv, n)

    def __truediv__(self, other):
        return self * self._coerce(other).reciprocal()

    def _coerce(self, other):
        if isinstance(other, FormalSeries):
            if other.order != self.order:
                raise ValueError("series order mismatch")
            return other
        return FormalSeries([other], self.order)


@lru_cache(maxsize=None)
def sine_series(order=DEFAULT_ORDER):
    return FormalSeries(
        [
            Fraction((-1) ** (k // 2), factorial(k)) if k % 2 else 0
            for k in range(order + 1)
        ],
        order,
    )


@lru_cache(maxsize=None)
def cosine_series(order=DEFAULT_ORDER):
    return FormalSeries(
        [
            Fraction((-1) ** (k // 2), factorial(k)) if k % 2 == 0 else 0
            for k in range(order + 1)
        ],
        order,
    )


@lru_cache(maxsize=None)
def tangent_series(order=DEFAULT_ORDER):
    """tan as sin/cos by exact series division (independent of T-numbers)."""
    return sine_series(order) / cosine_series(order)


@lru_cache(maxsize=None)
def secant_series(order=DEFAULT_ORDER):
    return cosine_series(order).reciprocal()


@lru_cache(maxsize=None)
def arctangent_series(order=DEFAULT_ORDER):
    """arctan as the term-by-term integral of 1/(1+z^2)."""
    cs = [Fraction(0)] * (order + 1)
    for m in range(0, order, 2):
        cs[m + 1] = Fraction((-1) ** (m // 2), m + 1)
    return FormalSeries(cs, order)


@lru_cache(maxsize=None)
def arctanh_series(order=DEFAULT_ORDER):
    cs = [Fraction(0)] * (order + 1)
    for m in range(0, order, 2):
        cs[m + 1] = Fraction(1, m + 1)
    return FormalSeries(cs, order)


@lru_cache(maxsize=None)
def _series_power(name, k, order):
    base = {
        "tan": tangent_series,
        "arctan": arctangent_series,
        "arctanh": arctanh_series,
    }[name](order)
    if k == 0:
        return FormalSeries([1], order)
    half = _series_power(name, k // 2, order)
    sq = half * half
    return sq * base if k % 2 else sq


# ---------------------------------------------------------------------------
# integer polynomials
# ---------------------------------------------------------------------------

class IntPolynomial:
    """Dense integer-coefficient polynomial, coefficient of x^k at index k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return IntPolynomial([x + y for x, y in zip(a, b)])

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def derivative(self):
        return IntPolynomial(
            [k * c for k, c in enumerate(self.coeffs)][1:] or [0]
        )

    def shift(self, k):
        """Multiply by x^k."""
        return IntPolynomial((0,) * k + self.coeffs)

    def divmod_exact(self, divisor):
        """Polynomial division; divisor must be monic in its leading term."""
        if not divisor.coeffs:
            raise ZeroDivisionError("division by zero polynomial")
        if divisor.coeffs[-1] != 1:
            raise ValueError("divisor must be monic for integer division")
        rem = list(self.coeffs)
        dd = divisor.degree
        qd = len(rem) - 1 - dd
        if qd < 0:
            return IntPolynomial([0]), IntPolynomial(rem)
        quot = [0] * (qd + 1)
        for k in range(qd, -1, -1):
            c = rem[k + dd]
            quot[k] = c
            if c:
                for j, b in enumerate(divisor.coeffs):
                    rem[k + j] -= c * b
        return IntPolynomial(quot), IntPolynomial(rem)

    def __call__(self, x):
        acc = 0 * x if self.coeffs else 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


# ---------------------------------------------------------------------------
# number sequences
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _bernoulli_upto(m_max):
    """B_0..B_{m_max} (convention B_1 = -1/2) by the convolution recurrence
    sum_{j<=m} C(m+1, j) B_j = 0."""
    vals = [Fraction(1)]
    for m in range(1, m_max + 1):
        acc = Fraction(0)
        for j in range(m):
            if vals[j] != 0:
                acc += comb(m + 1, j) * vals[j]
        vals.append(-acc / (m + 1))
    return tuple(vals)


def bernoulli(k):
    """Bernoulli number B_{2k} for k >= 1, as an exact Fraction."""
    if k < 1:
        raise ValueError("bernoulli requires k >= 1")
    return _bernoulli_upto(2 * k)[2 * k]


@lru_cache(maxsize=None)
def _zigzag_upto(n_max):
    """E_0..E_{n_max} by the boustrophedon (Seidel-Entringer) recurrence.

    Uses integer addition only, which makes it an oracle independent of the
    Bernoulli-number route to the tangent numbers.
    """
    out = [1]
    row = [1]
    for n in range(1, n_max + 1):
        prev = row
        row = [0]
        for k in range(1, n + 1):
            row.append(row[k - 1] + prev[n - k])
        out.append(row[n])
    return tuple(out)


def zigzag_numbers(n_max):
    """Zigzag numbers E_0..E_{n_max} (coefficients of tan + sec)."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    return list(_zigzag_upto(n_max))


def _tangent_number_bernoulli(k):
    """T_{2k-1} from the even Bernoulli numbers."""
    val = Fraction((-1) ** (k + 1) * 4**k * (4**k - 1), 2 * k) * bernoulli(k)
    if val.denominator != 1:
        raise ConsistencyError(f"tangent number T_{2*k-1} not an integer: {val}")
    return val.numerator


def tangent_numbers(k_max):
    """Tangent numbers [T_1, T_3, ..., T_{2*k_max-1}].

    Each value is computed both from the Bernoulli-number formula and from
    the boustrophedon recurrence (E_{2k-1} = T_{2k-1}); the two independent
    routes must agree exactly.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    zig = _zigzag_upto(2 * k_max - 1)
    out = []
    for k in range(1, k_max + 1):
        t_bern = _tangent_number_bernoulli(k)
        t_zig = zig[2 * k - 1]
        if t_bern != t_zig:
            raise ConsistencyError(
                f"tangent number mismatch at k={k}: "
                f"Bernoulli route {t_bern} != boustrophedon route {t_zig}"
            )
        out.append(t_bern)
    return out


def arctangent_number(n, k, order=None):
    """Signed arctangent number A(n,k) with egf (arctan z)^k / k!.

    Returns 0 when n < k or n - k is odd (the series has no such term).
    """
    return _atan_like_number(n, k, "arctan", order)


def arctanh_number(n, k, order=None):
    """Nonnegative hyperbolic variant with egf (atanh z)^k / k!."""
    return _atan_like_number(n, k, "arctanh", order)


def _atan_like_number(n, k, name, order):
    if k < 1:
        raise ValueError("k must be >= 1")
    if n < k or (n - k) % 2:
        return 0
    order = n if order is None else order
    if n > order:
        raise ValueError("n exceeds the series truncation order")
    coeff = _series_power(name, k, order)[n]
    val = coeff * Fraction(factorial(n), factorial(k))
    if val.denominator != 1:
        raise ConsistencyError(f"A({n},{k}) not an integer: {val}")
    return val.numerator


def higher_tangent_number(n, k, order=None):
    """Higher-order tangent number T(n,k) = n! [z^n] tan^k z.

    Returns 0 when n < k or n - k is odd.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if n < k or (n - k) % 2:
        return 0
    order = n if order is None else order
    if n > order:
        raise ValueError("n exceeds the series truncation order")
    val = _series_power("tan", k, order)[n] * factorial(n)
    if val.denominator != 1:
        raise ConsistencyError(f"T({n},{k}) not an integer: {val}")
    return val.numerator


@lru_cache(maxsize=None)
def derivative_polynomial(n):
    """Derivative polynomial P_n, degree n+1: P_n = (1+x^2) P_{n-1}', P_0 = x.

    Satisfies d^n/dt^n tan t = P_n(tan t) and
    d^n/dt^n cot t = (-1)^n P_n(cot t).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return IntPolynomial([0, 1])
    prev = derivative_polynomial(n - 1)
    return IntPolynomial([1, 0, 1]) * prev.derivative()


@lru_cache(maxsize=None)
def tangent_polynomial(n):
    """Tangent polynomial T_n(x) = sum_k T(n,k) x^k, from x*P_n = (1+x^2)*T_n.

    The division must be exact; its coefficients are cross-checked against
    the series route to the higher-order tangent numbers.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    quot, rem = derivative_polynomial(n).shift(1).divmod_exact(
        IntPolynomial([1, 0, 1])
    )
    if rem.coeffs:
        raise ConsistencyError(f"x*P_{n} is not divisible by 1+x^2: rem={rem}")
    series_route = [0] * (n + 1)
    for k in range(1, n + 1):
        series_route[k] = higher_tangent_number(n, k)
    if IntPolynomial(series_route) != quot:
        raise ConsistencyError(
            f"tangent polynomial mismatch at n={n}: "
            f"division route {quot} != series route {series_route}"
        )
    return quot


def zigzag_sum_identity(n):
    """Both sides of sum_{k=0}^{n-1} T(n,k+1) = 2^(n-1) E_n, exactly."""
    if n < 1:
        raise ValueError("n must be >= 1")
    lhs = sum(higher_tangent_number(n, k + 1) for k in range(n))
    rhs = 2 ** (n - 1) * _zigzag_upto(n)[n]
    return lhs, rhs
