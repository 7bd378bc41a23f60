"""Gaussian rationals: exact complex numbers with rational parts.

Fourier coefficients of real trigonometric polynomials live here, and
evaluation at quarter-period points stays inside the field because the
exponentials take values in {1, i, -1, -i}.
"""

from __future__ import annotations

from fractions import Fraction


class ComplexRational:
    """a + b*i with a, b rational; immutable by convention."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, *args):
        raise AttributeError("ComplexRational is immutable")

    def __repr__(self):
        return f"ComplexRational({self.re!r}, {self.im!r})"

    def __eq__(self, other):
        if isinstance(other, ComplexRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re or self.im)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return ComplexRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return ComplexRational(-self.re, -self.im)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return ComplexRational(self.re - other.re, self.im - other.im)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return ComplexRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conj(self):
        return ComplexRational(self.re, -self.im)

    def times_i_power(self, k):
        """Multiply by i**k."""
        k %= 4
        if k == 0:
            return self
        if k == 1:
            return ComplexRational(-self.im, self.re)
        if k == 2:
            return ComplexRational(-self.re, -self.im)
        return ComplexRational(self.im, -self.re)

    def is_real(self):
        return self.im == 0

    def __complex__(self):
        return complex(float(self.re), float(self.im))


def _coerce(x):
    if isinstance(x, ComplexRational):
        return x
    if isinstance(x, (int, Fraction)):
        return ComplexRational(x, 0)
    return None


CQ_ZERO = ComplexRational(0, 0)
CQ_ONE = ComplexRational(1, 0)
