"""Complex scalars that stay exact (Gaussian rational) whenever they can.

A :class:`Scalar` stores its real and imaginary parts either as
``fractions.Fraction`` (exact mode) or as ``float`` (approximate mode).
Any arithmetic involving an approximate operand produces an approximate
result; arithmetic between exact operands is exact. Degree and exponent
bookkeeping elsewhere in the package therefore never depends on floating
point, only coefficient values may degrade.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

TAU_ZERO = 1e-10  # relative threshold below which a float scalar counts as zero
TAU_RANK = 1e-8   # relative singular-value cutoff for numeric matrix rank
TAU_PROJ = 1e-8   # angular tolerance for projective point equality

_ExactPart = Fraction


def _as_fraction(x) -> Fraction | None:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return None


class Scalar:
    """An element of the coefficient field, exact or floating point."""

    __slots__ = ("re", "im", "exact")

    def __init__(self, re=0, im=0, exact: bool | None = None):
        fre, fim = _as_fraction(re), _as_fraction(im)
        if exact is False or fre is None or fim is None:
            self.re = float(re)
            self.im = float(im)
            self.exact = False
        else:
            self.re = fre
            self.im = fim
            self.exact = True

    @staticmethod
    def from_complex(z: complex) -> "Scalar":
        return Scalar(z.real, z.imag, exact=False)

    @staticmethod
    def coerce(value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return Scalar(value)
        if isinstance(value, float):
            return Scalar(value, 0.0, exact=False)
        if isinstance(value, complex):
            return Scalar.from_complex(value)
        raise TypeError(f"cannot interpret {value!r} as a Scalar")

    # -- arithmetic -------------------------------------------------------

    def _pair(self, other):
        other = Scalar.coerce(other)
        if self.exact and other.exact:
            return self.re, self.im, other.re, other.im, True
        return (float(self.re), float(self.im), float(other.re),
                float(other.im), False)

    def __add__(self, other):
        a, b, c, d, exact = self._pair(other)
        return Scalar(a + c, b + d, exact)

    __radd__ = __add__

    def __sub__(self, other):
        a, b, c, d, exact = self._pair(other)
        return Scalar(a - c, b - d, exact)

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __mul__(self, other):
        a, b, c, d, exact = self._pair(other)
        return Scalar(a * c - b * d, a * d + b * c, exact)

    __rmul__ = __mul__

    def __truediv__(self, other):
        a, b, c, d, exact = self._pair(other)
        n = c * c + d * d
        if n == 0:
            raise ZeroDivisionError("division by zero scalar")
        return Scalar((a * c + b * d) / n, (b * c - a * d) / n, exact)

    def __rtruediv__(self, other):
        return Scalar.coerce(other) / self

    def __neg__(self):
        return Scalar(-self.re, -self.im, self.exact)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("Scalar powers must be integers")
        if k < 0:
            return Scalar(1) / self ** (-k)
        out = Scalar(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "Scalar":
        return Scalar(self.re, -self.im, self.exact)

    # -- queries ----------------------------------------------------------

    def __abs__(self) -> float:
        return math.hypot(float(self.re), float(self.im))

    def is_zero(self, scale: float = 1.0) -> bool:
        """Exact zero test for exact scalars; |s| < TAU_ZERO*scale otherwise."""
        if self.exact:
            return self.re == 0 and self.im == 0
        return abs(self) < TAU_ZERO * max(scale, 0.0) if scale else abs(self) == 0.0

    def __bool__(self):
        return not (self.exact and self.re == 0 and self.im == 0) and abs(self) != 0.0

    def __eq__(self, other):
        if not isinstance(other, (Scalar, int, float, complex, Fraction)):
            return NotImplemented
        other = Scalar.coerce(other)
        if self.exact and other.exact:
            return self.re == other.re and self.im == other.im
        return complex(self) == complex(other)

    def __hash__(self):
        return hash(complex(self))

    def approx_eq(self, other, tol: float = TAU_ZERO, scale: float = 1.0) -> bool:
        other = Scalar.coerce(other)
        if self.exact and other.exact:
            return self == other
        return abs(self - other) <= tol * max(scale, abs(self), abs(other))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def to_mpc(self):
        import mpmath

        if self.exact:
            return (mpmath.mpf(self.re.numerator) / self.re.denominator
                    + mpmath.mpc(0, 1) * mpmath.mpf(self.im.numerator) / self.im.denominator)
        return mpmath.mpc(self.re, self.im)

    # -- formatting --------------------------------------------------------

    def _part_str(self, value, imag: bool) -> str:
        if self.exact:
            num = str(value) if not imag else (
                "i" if value == 1 else "-i" if value == -1 else f"{value}*i")
        else:
            num = repr(value) if not imag else f"{value!r}*i"
        return num

    def __str__(self) -> str:
        re_zero = (self.re == 0) if self.exact else (self.re == 0.0)
        im_zero = (self.im == 0) if self.exact else (self.im == 0.0)
        if im_zero:
            return self._part_str(self.re, imag=False)
        if re_zero:
            return self._part_str(self.im, imag=True)
        im_str = self._part_str(abs(self.im) if not self.exact else abs(self.im), imag=True)
        sign = "-" if (self.im < 0) else "+"
        return f"{self._part_str(self.re, imag=False)}{sign}{im_str}"

    def __repr__(self) -> str:
        return f"Scalar({self})"


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def root_of_unity(order: int, index: int) -> Scalar:
    """exp(2*pi*i*index/order), exact when the value is Gaussian rational.

    Arithmetic predicates about roots of unity (is this also a k-th root?)
    must be decided on the (order, index) pair, never on the returned value.
    """
    if order <= 0:
        raise ValueError("order must be positive")
    index %= order
    frac = Fraction(index, order)
    exact_values = {
        Fraction(0): Scalar(1),
        Fraction(1, 2): Scalar(-1),
        Fraction(1, 4): Scalar(0, 1),
        Fraction(3, 4): Scalar(0, -1),
    }
    if frac in exact_values:
        return exact_values[frac]
    z = cmath.exp(2j * cmath.pi * index / order)
    return Scalar.from_complex(z)


def is_kth_root(order: int, index: int, k: int) -> bool:
    """Whether exp(2*pi*i*index/order) satisfies z**k = 1, decided exactly."""
    return (index * k) % order == 0
