"""Exact scalars: rationals and Gaussian rationals.

Every expectation, cumulant and Moebius value in the package is exact.
Real quantities are :class:`fractions.Fraction`; quantities that may pick up
an imaginary unit are :class:`GaussianRational`.
"""

from fractions import Fraction
from numbers import Rational as _Rational

Rational = Fraction

__all__ = ["Rational", "GaussianRational", "I", "as_scalar", "conj", "render"]


class GaussianRational:
    """An exact complex number ``re + im*i`` with rational parts.

    Instances are immutable and hashable; a value with zero imaginary part
    compares and hashes equal to the corresponding ``Fraction``/``int``.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            re, im = re.re, re.im + Fraction(im)
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def _make(cls, re, im):
        self = object.__new__(cls)
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)
        return self

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        return render(self)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, _Rational):
            return self.im == 0 and self.re == other
        if isinstance(other, complex):
            return self.re == other.real and self.im == other.imag
        return NotImplemented

    def __neg__(self):
        return GaussianRational._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational._make(self.re + other.re, self.im + other.im)
        if isinstance(other, _Rational):
            return GaussianRational._make(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational._make(self.re - other.re, self.im - other.im)
        if isinstance(other, _Rational):
            return GaussianRational._make(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, _Rational):
            return GaussianRational._make(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            a, b, c, d = self.re, self.im, other.re, other.im
            if not b and not d:
                return GaussianRational._make(a * c, b)
            return GaussianRational._make(a * c - b * d, a * d + b * c)
        if isinstance(other, _Rational):
            return GaussianRational._make(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _Rational):
            other = Fraction(other)
            return GaussianRational._make(self.re / other, self.im / other)
        if isinstance(other, GaussianRational):
            norm = other.re * other.re + other.im * other.im
            if not norm:
                raise ZeroDivisionError("division by zero")
            num = self * other.conjugate()
            return GaussianRational._make(num.re / norm, num.im / norm)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, _Rational):
            return GaussianRational(other) / self
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = GaussianRational._make(Fraction(1), Fraction(0))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self):
        return GaussianRational._make(self.re, -self.im)

    @property
    def real(self):
        return self.re

    @property
    def imag(self):
        return self.im

    def is_real(self):
        return self.im == 0


I = GaussianRational._make(Fraction(0), Fraction(1))
ZERO = GaussianRational._make(Fraction(0), Fraction(0))
ONE = GaussianRational._make(Fraction(1), Fraction(0))


def as_scalar(value):
    """Coerce ``int``, ``Fraction``, ``(re, im)`` or a ``GaussianRational``.

    Floats are rejected: nothing in the package is allowed to round.
    """
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, _Rational):
        return GaussianRational._make(Fraction(value), Fraction(0))
    if isinstance(value, str):
        return GaussianRational(Fraction(value))
    if isinstance(value, tuple) and len(value) == 2:
        return GaussianRational(Fraction(value[0]), Fraction(value[1]))
    raise TypeError(f"cannot use {value!r} as an exact scalar")


def conj(value):
    if isinstance(value, GaussianRational):
        return value.conjugate()
    return value


def _render_fraction(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def render(value):
    """Canonical text form: ``p/q`` for reals, ``p/q+r/si`` for complex values."""
    if not isinstance(value, GaussianRational):
        return _render_fraction(value)
    if value.im == 0:
        return _render_fraction(value.re)
    im = _render_fraction(value.im) + "i"
    if value.re == 0:
        return im
    sign = "" if im.startswith("-") else "+"
    return f"{_render_fraction(value.re)}{sign}{im}"
