"""Exact Gaussian rational arithmetic.

Every scalar in the engine core is an element of Q[i], represented by a pair
of ``fractions.Fraction``. No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError("expected int, Fraction or string, got %r" % (x,))


class GQ:
    """A Gaussian rational a + b*i, immutable and hashable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, *a):
        raise AttributeError("GQ is immutable")

    # -- constructors ------------------------------------------------------
    @staticmethod
    def of(x) -> "GQ":
        if isinstance(x, GQ):
            return x
        return GQ(_frac(x))

    # -- predicates --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def is_one(self) -> bool:
        return self.re == 1 and not self.im

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        other = GQ.of(other)
        return GQ(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GQ(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GQ.of(other))

    def __rsub__(self, other):
        return GQ.of(other) + (-self)

    def __mul__(self, other):
        other = GQ.of(other)
        return GQ(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GQ.of(other)
        n = other.re * other.re + other.im * other.im
        if not n:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GQ(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        return GQ.of(other) / self

    def conjugate(self) -> "GQ":
        return GQ(self.re, -self.im)

    # -- hashing / equality -------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GQ.of(other)
        if not isinstance(other, GQ):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    # -- rendering ----------------------------------------------------------
    def __repr__(self):
        return "GQ(%s)" % render_gq(self)

    def __str__(self):
        return render_gq(self)


ZERO = GQ(0)
ONE = GQ(1)
I = GQ(0, 1)
HALF_OVER_I = GQ(0, Fraction(-1, 2))  # 1/(2i) = -i/2


def render_fraction(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def render_gq(z: GQ) -> str:
    """Render in the coefficient grammar: RAT, RAT i, or (RAT+RAT i)."""
    if not z.im:
        return render_fraction(z.re)
    if not z.re:
        return render_fraction(z.im) + "i"
    im = render_fraction(abs(z.im))
    sign = "+" if z.im > 0 else "-"
    return "(%s%s%si)" % (render_fraction(z.re), sign, im)


def gq_sort_key(z: GQ):
    return (z.re, z.im)
