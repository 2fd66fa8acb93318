"""Exact complex-rational arithmetic (pairs of Fractions).

Entries such as (1+i)/2 stay exact here, which keeps the small-matrix
cumulant oracle free of floating error.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["GaussianRational", "to_gaussian_rational"]


class GaussianRational:
    """A complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    @property
    def is_real(self):
        return self.im == 0

    def __add__(self, other):
        other = to_gaussian_rational(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = to_gaussian_rational(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return to_gaussian_rational(other) - self

    def __mul__(self, other):
        other = to_gaussian_rational(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __eq__(self, other):
        try:
            other = to_gaussian_rational(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(self.re, self.im)

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"


def to_gaussian_rational(x):
    """Coerce int/Fraction/complex/GaussianRational to GaussianRational.

    Floats and complex floats convert via Fraction, i.e. exactly; values
    such as 0.5 or 0.5+0.5j are therefore safe inputs.
    """
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x, 0)
    if isinstance(x, float):
        return GaussianRational(Fraction(x), 0)
    if isinstance(x, complex):
        return GaussianRational(Fraction(x.real), Fraction(x.imag))
    raise TypeError(f"cannot interpret {x!r} as a Gaussian rational")
