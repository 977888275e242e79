"""Exact complex rationals and coefficient helpers.

Coefficients are plain Python numbers: ``int`` and ``Fraction`` are exact,
``float`` and ``complex`` are approximate. :class:`ComplexRational` fills the
one gap in the numeric tower, an exact complex number with rational parts.
"""
from __future__ import annotations

import math
import numbers
from fractions import Fraction

ZERO_TOL = 1e-12


class ComplexRational:
    """Exact complex number ``re + im*i`` with rational parts.

    Arithmetic with ints and Fractions stays exact. Mixing with a float or
    complex operand degrades to a Python ``complex``.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _lift(x):
        if isinstance(x, ComplexRational):
            return x
        if isinstance(x, (int, Fraction)):
            return ComplexRational(x, 0)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return complex(self) + other
        return exact_complex(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return complex(self) - other
        return exact_complex(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return complex(self) * other
        return exact_complex(self.re * o.re - self.im * o.im,
                             self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return complex(self) / other
        den = o.re * o.re + o.im * o.im
        if den == 0:
            raise ZeroDivisionError("division by zero")
        num = self * o.conjugate()
        return exact_complex(num.re / den, num.im / den)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return other / complex(self)
        return o / self

    def __neg__(self):
        return ComplexRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __abs__(self):
        return math.hypot(self.re, self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self):
        return ComplexRational(self.re, -self.im)

    @property
    def real(self):
        return self.re

    @property
    def imag(self):
        return self.im

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            if isinstance(other, numbers.Complex):
                return complex(self) == other
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"ComplexRational({self.re}, {self.im})"


def exact_complex(re, im):
    """Build a complex coefficient, collapsing to a real one when ``im == 0``."""
    if im == 0:
        re = Fraction(re)
        return re.numerator if re.denominator == 1 else re
    return ComplexRational(re, im)


I = ComplexRational(0, 1)


def is_exact(c) -> bool:
    return isinstance(c, (int, Fraction, ComplexRational))


def is_zero(c) -> bool:
    if is_exact(c):
        return not c
    return abs(c) <= ZERO_TOL


def is_real(c) -> bool:
    if isinstance(c, ComplexRational):
        return c.im == 0
    if isinstance(c, complex):
        return c.imag == 0
    return isinstance(c, numbers.Real)


def normalize(c):
    """Canonical exact form: integral Fractions become ints."""
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    if isinstance(c, ComplexRational) and c.im == 0:
        return normalize(c.re)
    return c


def exact_sqrt(x):
    """Square root of a nonnegative rational: exact when rational, else float."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("negative argument")
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return normalize(Fraction(rn, rd))
    return math.sqrt(x)
