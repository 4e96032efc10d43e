"""Truncated Puiseux series in one parameter t.

A series stores a ramification index ``ram`` (call it e), a sparse map
``terms`` from integer exponents q to coefficients (the term is t**(q/e)),
and a truncation ``trunc``: exponents q >= trunc are unknown, everything
below is certified. ``trunc is None`` means the series is known exactly
(a finite expression, e.g. a polynomial parametrization).

All operations propagate the tightest truncation derivable from their
inputs, so downstream consumers can tell a certified zero coefficient from
an unknown one.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import NotAnalytic, NotAUnit, TruncationTooLow
from .scalars import TAU_ZERO, Scalar


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _clean_terms(terms: dict[int, Scalar]) -> dict[int, Scalar]:
    """Drop exact zeros and float coefficients that are noise.

    Float coefficients below TAU_ZERO relative to the largest coefficient
    in the series are residues of cancellations; keeping them would corrupt
    the order of the series.
    """
    kept = {q: c for q, c in terms.items() if not (c.exact and not c)}
    if not kept:
        return {}
    scale = max(abs(c) for c in kept.values())
    out = {}
    for q, c in kept.items():
        if not c.exact and abs(c) < TAU_ZERO * scale:
            continue
        if not c.exact and abs(c) == 0.0:
            continue
        out[q] = c
    return out


class PuiseuxSeries:
    __slots__ = ("ram", "terms", "trunc")

    def __init__(self, terms: dict[int, Scalar], ram: int = 1,
                 trunc: int | None = None, _normalize: bool = True):
        if ram < 1:
            raise ValueError("ramification index must be >= 1")
        self.ram = ram
        self.trunc = trunc
        if _normalize:
            terms = _clean_terms({q: Scalar.coerce(c) for q, c in terms.items()})
            if trunc is not None:
                terms = {q: c for q, c in terms.items() if q < trunc}
        self.terms = terms
        if _normalize:
            self._reduce_ram()

    def _reduce_ram(self):
        if self.ram == 1:
            return
        g = self.ram
        for q in self.terms:
            g = math.gcd(g, q)
            if g == 1:
                return
        if not self.terms:
            g = self.ram
        self.terms = {q // g: c for q, c in self.terms.items()}
        if self.trunc is not None:
            self.trunc = _ceil_div(self.trunc, g)
        self.ram //= g

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero(trunc: int | None = None, ram: int = 1) -> "PuiseuxSeries":
        return PuiseuxSeries({}, ram=ram, trunc=trunc)

    @staticmethod
    def constant(c) -> "PuiseuxSeries":
        return PuiseuxSeries({0: Scalar.coerce(c)})

    @staticmethod
    def t_power(q: int = 1, ram: int = 1, coef=1) -> "PuiseuxSeries":
        return PuiseuxSeries({q: Scalar.coerce(coef)}, ram=ram)

    @staticmethod
    def from_pairs(pairs, ram: int = 1, trunc: int | None = None) -> "PuiseuxSeries":
        terms: dict[int, Scalar] = {}
        for q, c in pairs:
            c = Scalar.coerce(c)
            terms[q] = terms[q] + c if q in terms else c
        return PuiseuxSeries(terms, ram=ram, trunc=trunc)

    # -- bookkeeping ------------------------------------------------------

    @property
    def trunc_real(self) -> Fraction | None:
        return None if self.trunc is None else Fraction(self.trunc, self.ram)

    @property
    def is_exact(self) -> bool:
        return self.trunc is None

    def _scaled(self, L: int) -> tuple[dict[int, Scalar], int | None]:
        """Terms and trunc rescaled to ramification L (a multiple of ram)."""
        f = L // self.ram
        terms = self.terms if f == 1 else {q * f: c for q, c in self.terms.items()}
        trunc = None if self.trunc is None else self.trunc * f
        return terms, trunc

    def ord(self) -> Fraction | int | None:
        """Least certified exponent. None for an exactly-zero series.

        Raises TruncationTooLow when the series has no certified nonzero
        term but is only known up to a finite truncation.
        """
        if not self.terms:
            if self.trunc is None:
                return None
            raise TruncationTooLow(
                f"series is O(t^{self.trunc_real}) with no certified term")
        q = min(self.terms)
        r = Fraction(q, self.ram)
        return int(r) if r.denominator == 1 else r

    def ord_lower_bound(self) -> Fraction:
        """A certified lower bound for the order (trunc for zero-so-far)."""
        if self.terms:
            return Fraction(min(self.terms), self.ram)
        if self.trunc is None:
            return Fraction(10 ** 9)  # exact zero: effectively +infinity
        return Fraction(self.trunc, self.ram)

    def leading(self) -> tuple[Fraction | int, Scalar]:
        o = self.ord()
        if o is None:
            raise TruncationTooLow("zero series has no leading term")
        return o, self.terms[min(self.terms)]

    def coefficient(self, exponent: Fraction | int) -> Scalar | None:
        """Certified coefficient of t**exponent, or None if uncertified."""
        e = Fraction(exponent)
        q = e * self.ram
        certified = self.trunc is None or q < self.trunc
        if not certified:
            return None
        if q.denominator != 1:
            return Scalar(0)
        return self.terms.get(int(q), Scalar(0))

    def is_zero_certified(self) -> bool:
        return not self.terms and self.trunc is None

    def max_coef_magnitude(self) -> float:
        return max((abs(c) for c in self.terms.values()), default=0.0)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "PuiseuxSeries":
        if not isinstance(other, PuiseuxSeries):
            other = PuiseuxSeries.constant(other)
        L = math.lcm(self.ram, other.ram)
        a, ta = self._scaled(L)
        b, tb = other._scaled(L)
        trunc = ta if tb is None else tb if ta is None else min(ta, tb)
        terms = dict(a)
        for q, c in b.items():
            terms[q] = terms[q] + c if q in terms else c
        return PuiseuxSeries(terms, ram=L, trunc=trunc)

    __radd__ = __add__

    def __neg__(self) -> "PuiseuxSeries":
        return PuiseuxSeries({q: -c for q, c in self.terms.items()},
                             ram=self.ram, trunc=self.trunc, _normalize=False)

    def __sub__(self, other) -> "PuiseuxSeries":
        if not isinstance(other, PuiseuxSeries):
            other = PuiseuxSeries.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> "PuiseuxSeries":
        return PuiseuxSeries.constant(other) - self

    def scalar_mul(self, c) -> "PuiseuxSeries":
        c = Scalar.coerce(c)
        if c.exact and not c:
            return PuiseuxSeries.zero()
        return PuiseuxSeries({q: v * c for q, v in self.terms.items()},
                             ram=self.ram, trunc=self.trunc)

    def __mul__(self, other) -> "PuiseuxSeries":
        if isinstance(other, (int, float, complex, Fraction, Scalar)):
            return self.scalar_mul(other)
        L = math.lcm(self.ram, other.ram)
        a, ta = self._scaled(L)
        b, tb = other._scaled(L)
        if (not a and ta is None) or (not b and tb is None):
            return PuiseuxSeries.zero()  # exact zero annihilates
        # certified region of the product: min(Ta + ord(b), Tb + ord(a)),
        # using the truncation itself as the order bound of a zero-so-far factor
        orda = min(a) if a else ta
        ordb = min(b) if b else tb
        bounds = []
        if ta is not None:
            bounds.append(ta + ordb)
        if tb is not None:
            bounds.append(tb + orda)
        trunc = min(bounds) if bounds else None
        terms: dict[int, Scalar] = {}
        for q1, c1 in a.items():
            for q2, c2 in b.items():
                q = q1 + q2
                if trunc is not None and q >= trunc:
                    continue
                c = c1 * c2
                terms[q] = terms[q] + c if q in terms else c
        return PuiseuxSeries(terms, ram=L, trunc=trunc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "PuiseuxSeries":
        if not isinstance(k, int) or k < 0:
            raise ValueError("series powers must be non-negative integers")
        out = PuiseuxSeries.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def shift(self, exponent: Fraction | int) -> "PuiseuxSeries":
        """Multiply by t**exponent."""
        e = Fraction(exponent)
        L = math.lcm(self.ram, e.denominator)
        a, ta = self._scaled(L)
        dq = int(e * L)
        return PuiseuxSeries({q + dq: c for q, c in a.items()}, ram=L,
                             trunc=None if ta is None else ta + dq)

    def truncated(self, bound: Fraction | int) -> "PuiseuxSeries":
        """Forget everything at or above t**bound."""
        b = Fraction(bound)
        L = math.lcm(self.ram, b.denominator)
        a, ta = self._scaled(L)
        qb = int(b * L)
        trunc = qb if ta is None else min(ta, qb)
        return PuiseuxSeries({q: c for q, c in a.items() if q < trunc},
                             ram=L, trunc=trunc)

    def derivative(self) -> "PuiseuxSeries":
        """Formal d/dt."""
        e = self.ram
        terms = {}
        for q, c in self.terms.items():
            if q == 0:
                continue
            terms[q - e] = c * Fraction(q, e)
        trunc = None if self.trunc is None else self.trunc - e
        return PuiseuxSeries(terms, ram=e, trunc=trunc)

    def invert_unit(self) -> "PuiseuxSeries":
        """Inverse of a unit (order exactly 0) series."""
        try:
            o = self.ord()
        except TruncationTooLow:
            raise NotAUnit("cannot invert a series with no certified term")
        if o is None or o != 0:
            raise NotAUnit(f"series of order {o} is not a unit")
        c0 = self.terms[0]
        u = (self - PuiseuxSeries.constant(c0)).scalar_mul(Scalar(1) / c0)
        if u.is_zero_certified():
            return PuiseuxSeries.constant(Scalar(1) / c0)
        bound = self.trunc_real
        if bound is None and u.terms:
            raise NotAUnit("exact inverse is not a finite series; truncate first")
        # geometric series in -u, truncated at this series' own certainty
        out = PuiseuxSeries.constant(1)
        power = PuiseuxSeries.constant(1)
        ord_u = u.ord_lower_bound()
        j = 1
        while u.terms and j * ord_u < bound:
            power = power * (-u)
            out = out + power
            j += 1
        out = out.scalar_mul(Scalar(1) / c0)
        return out.truncated(bound) if bound is not None else out

    def compose(self, inner: "PuiseuxSeries") -> "PuiseuxSeries":
        """self(inner(t)). Inner order must be positive, unless self is exact
        (a finite expression), in which case order 0 is allowed."""
        inner_ord = inner.ord_lower_bound()
        if self.trunc is not None and inner_ord <= 0:
            raise NotAnalytic(
                "composition with inner order <= 0 needs an exact outer series")
        if min(self.terms, default=0) < 0:
            raise NotAnalytic("composition of series with negative exponents")
        base = inner if self.ram == 1 else _nth_root(inner, self.ram)
        acc = None
        power = PuiseuxSeries.constant(1)
        prev_q = 0
        for q in sorted(self.terms):
            power = power * base ** (q - prev_q)
            prev_q = q
            term = power.scalar_mul(self.terms[q])
            acc = term if acc is None else acc + term
        if acc is None:
            acc = PuiseuxSeries.zero()
        # the outer truncation contributes an O(inner**(trunc/ram)) error
        if self.trunc is not None:
            acc = acc.truncated(Fraction(self.trunc, self.ram) * inner_ord)
        return acc

    # -- comparisons -------------------------------------------------------

    def equals_mod_trunc(self, other: "PuiseuxSeries", tol: float = 0.0) -> bool:
        """Equality of all coefficients certified on both sides."""
        L = math.lcm(self.ram, other.ram)
        a, ta = self._scaled(L)
        b, tb = other._scaled(L)
        cut = min(x for x in (ta, tb) if x is not None) if (ta is not None or tb is not None) else None
        scale = max(self.max_coef_magnitude(), other.max_coef_magnitude(), 1.0)
        for q in set(a) | set(b):
            if cut is not None and q >= cut:
                continue
            d = a.get(q, Scalar(0)) - b.get(q, Scalar(0))
            if d.exact:
                if d:
                    return False
            elif abs(d) > max(tol, TAU_ZERO) * scale:
                return False
        return True

    def is_zero_mod_trunc(self, scale: float = 1.0) -> bool:
        """All certified coefficients vanish (within TAU_ZERO*scale if float)."""
        for c in self.terms.values():
            if c.exact:
                if c:
                    return False
            elif abs(c) > TAU_ZERO * max(scale, 1.0):
                return False
        return True

    # -- evaluation --------------------------------------------------------

    def eval_complex(self, t: complex) -> complex:
        out = 0j
        for q, c in self.terms.items():
            out += complex(c) * t ** (q / self.ram)
        return out

    def eval_mpc(self, t):
        import mpmath

        out = mpmath.mpc(0)
        for q, c in self.terms.items():
            p = t ** q if self.ram == 1 else t ** (mpmath.mpf(q) / self.ram)
            out += c.to_mpc() * p
        return out

    # -- formatting --------------------------------------------------------

    def _exp_str(self, q: int) -> str:
        r = Fraction(q, self.ram)
        if r == 1:
            return "t"
        if r.denominator == 1:
            return f"t^{r.numerator}"
        return f"t^({r.numerator}/{r.denominator})"

    def __str__(self) -> str:
        from .parsing import format_terms

        parts = [(str(c), self._exp_str(q) if q else "")
                 for q, c in sorted(self.terms.items())]
        body = format_terms(parts)
        if self.trunc is not None:
            tail = f"O({self._exp_str(self.trunc)})" if self.trunc != 0 else "O(1)"
            body = f"{body} + {tail}" if body != "0" else tail
        return body

    def __repr__(self) -> str:
        return f"PuiseuxSeries({self})"


def _nth_root(g: "PuiseuxSeries", e: int) -> "PuiseuxSeries":
    """Principal e-th root of a series with a certified leading term."""
    o = g.ord()
    if o is None:
        raise NotAnalytic("cannot take a root of the zero series")
    _, c = g.leading()
    L = g.ram
    body = g.shift(-Fraction(min(g.terms), L)).scalar_mul(Scalar(1) / c)
    u = body - PuiseuxSeries.constant(1)
    bound = body.trunc_real
    if bound is None and u.terms:
        raise NotAnalytic("exact root is not a finite series; truncate first")
    out = PuiseuxSeries.constant(1)
    power = PuiseuxSeries.constant(1)
    j = 1
    coef = Fraction(1)
    ord_u = u.ord_lower_bound()
    while u.terms and j * ord_u < bound:
        coef *= Fraction(Fraction(1, e) - (j - 1), j)
        power = power * u
        out = out + power.scalar_mul(coef)
        j += 1
    if c.exact and c == Scalar(1):
        root_c = Scalar(1)
    else:
        root_c = Scalar.from_complex(complex(c) ** (1.0 / e))
    out = out.scalar_mul(root_c)
    if bound is not None:
        out = out.truncated(bound)
    return out.shift(Fraction(min(g.terms), L * e))


def divide(num: PuiseuxSeries, den: PuiseuxSeries) -> PuiseuxSeries:
    """num/den as a series; the order of the result may be negative."""
    o = den.ord()
    if o is None:
        raise ZeroDivisionError("division by the zero series")
    unit = den.shift(-o)
    return (num * unit.invert_unit()).shift(-o)


def derivative_ratio(eta1: PuiseuxSeries, eta2: PuiseuxSeries) -> PuiseuxSeries:
    """(d eta2/dt) / (d eta1/dt), which must be analytic (order >= 0).

    For a standard plane-branch parametrization (t^n, t^B1 + ...) the result
    expands as (B1/n) t^(B1-n) + ..., the slope of the moving tangent line.
    """
    d1 = eta1.derivative()
    d2 = eta2.derivative()
    o1 = d1.ord()
    o2 = d2.ord_lower_bound() if not d2.terms else d2.ord()
    if o1 is None:
        raise NotAnalytic("first component is constant")
    if o2 is not None and o2 < o1:
        raise NotAnalytic(
            f"ratio has a pole: ord {o2} over ord {o1}")
    return divide(d2, d1)
