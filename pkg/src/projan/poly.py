"""Sparse multivariate polynomials over the Scalar coefficient field."""

from __future__ import annotations

from fractions import Fraction

from .errors import DegenerateInput, DimensionMismatch, UnknownVariableError
from .scalars import Scalar
from .series import PuiseuxSeries

Exponents = tuple[int, ...]


class Poly:
    """Polynomial in an ordered tuple of named variables.

    ``terms`` maps exponent vectors to nonzero coefficients; the exponent
    vector length always equals the number of variables.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple[str, ...] | list[str],
                 terms: dict[Exponents, Scalar] | None = None,
                 _normalize: bool = True):
        self.vars = tuple(vars)
        terms = terms or {}
        if _normalize:
            clean: dict[Exponents, Scalar] = {}
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != len(self.vars):
                    raise DimensionMismatch(
                        f"exponent vector {exps} for {len(self.vars)} variables")
                c = Scalar.coerce(c)
                if c.exact and not c:
                    continue
                if not c.exact and abs(c) == 0.0:
                    continue
                clean[exps] = c
            terms = clean
        self.terms = terms

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero(vars) -> "Poly":
        return Poly(vars, {})

    @staticmethod
    def constant(vars, c) -> "Poly":
        vars = tuple(vars)
        return Poly(vars, {(0,) * len(vars): Scalar.coerce(c)})

    @staticmethod
    def variable(vars, name: str) -> "Poly":
        vars = tuple(vars)
        if name not in vars:
            raise UnknownVariableError(f"unknown variable {name!r}", name, 0)
        exps = tuple(1 if v == name else 0 for v in vars)
        return Poly(vars, {exps: Scalar(1)})

    # -- ring operations ---------------------------------------------------

    def _check_vars(self, other: "Poly"):
        if self.vars != other.vars:
            raise DimensionMismatch(
                f"variable mismatch: {self.vars} vs {other.vars}")

    def __add__(self, other) -> "Poly":
        if isinstance(other, (int, float, complex, Fraction, Scalar)):
            other = Poly.constant(self.vars, other)
        self._check_vars(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms[e] + c if e in terms else c
        return Poly(self.vars, terms)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.vars, {e: -c for e, c in self.terms.items()},
                    _normalize=False)

    def __sub__(self, other) -> "Poly":
        if isinstance(other, (int, float, complex, Fraction, Scalar)):
            other = Poly.constant(self.vars, other)
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return Poly.constant(self.vars, other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, float, complex, Fraction, Scalar)):
            c = Scalar.coerce(other)
            return Poly(self.vars, {e: v * c for e, v in self.terms.items()})
        self._check_vars(other)
        terms: dict[Exponents, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                terms[e] = terms[e] + c if e in terms else c
        return Poly(self.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        out = Poly.constant(self.vars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset((e, complex(c)) for e, c in self.terms.items())))

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(x == 0 for x in e) for e in self.terms)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def max_coef_magnitude(self) -> float:
        return max((abs(c) for c in self.terms.values()), default=0.0)

    # -- calculus ----------------------------------------------------------

    def diff(self, var: str) -> "Poly":
        """Formal partial derivative with respect to one variable."""
        if var not in self.vars:
            raise UnknownVariableError(f"unknown variable {var!r}", var, 0)
        i = self.vars.index(var)
        terms: dict[Exponents, Scalar] = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            e2 = e[:i] + (e[i] - 1,) + e[i + 1:]
            c2 = c * e[i]
            terms[e2] = terms[e2] + c2 if e2 in terms else c2
        return Poly(self.vars, terms)

    def gradient(self) -> list["Poly"]:
        return [self.diff(v) for v in self.vars]

    def hessian(self) -> list[list["Poly"]]:
        grads = self.gradient()
        return [[g.diff(v) for v in self.vars] for g in grads]

    # -- evaluation --------------------------------------------------------

    def eval(self, point) -> Scalar:
        """Evaluate at a vector of scalars (one per variable)."""
        if len(point) != len(self.vars):
            raise DimensionMismatch(
                f"point of length {len(point)} for {len(self.vars)} variables")
        point = [Scalar.coerce(x) for x in point]
        out = Scalar(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * x ** k
            out = out + v
        return out

    def eval_complex(self, point) -> complex:
        return complex(self.eval(point))

    def eval_mpc(self, point):
        import mpmath

        out = mpmath.mpc(0)
        for e, c in self.terms.items():
            v = c.to_mpc()
            for x, k in zip(point, e):
                if k:
                    v *= x ** k
            out += v
        return out

    def eval_series(self, subst: dict[str, PuiseuxSeries]) -> PuiseuxSeries:
        """Substitute a series for every variable (truncated composition)."""
        missing = [v for v in self.vars if v not in subst]
        if missing:
            raise UnknownVariableError(
                f"no substitution for {missing[0]!r}", missing[0], 0)
        series = [subst[v] for v in self.vars]
        out = None
        for e, c in self.terms.items():
            term = PuiseuxSeries.constant(c)
            for s, k in zip(series, e):
                if k:
                    term = term * s ** k
            out = term if out is None else out + term
        return out if out is not None else PuiseuxSeries.zero()

    # -- structure ---------------------------------------------------------

    def with_vars(self, vars, mapping: dict[str, str] | None = None) -> "Poly":
        """Reinterpret over a new variable tuple, optionally renaming.

        Every (possibly renamed) variable of self must appear in ``vars``.
        """
        vars = tuple(vars)
        mapping = mapping or {}
        idx = []
        for v in self.vars:
            name = mapping.get(v, v)
            if name not in vars:
                raise UnknownVariableError(f"unknown variable {name!r}", name, 0)
            idx.append(vars.index(name))
        terms: dict[Exponents, Scalar] = {}
        for e, c in self.terms.items():
            e2 = [0] * len(vars)
            for pos, k in zip(idx, e):
                e2[pos] += k
            terms[tuple(e2)] = c
        return Poly(vars, terms)

    def mul_variable(self, name: str) -> "Poly":
        return self * Poly.variable(self.vars, name)

    # -- formatting --------------------------------------------------------

    def _monomial_str(self, e: Exponents) -> str:
        parts = []
        for v, k in zip(self.vars, e):
            if k == 1:
                parts.append(v)
            elif k > 1:
                parts.append(f"{v}^{k}")
        return "*".join(parts)

    def __str__(self) -> str:
        from .parsing import format_terms

        items = sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))
        parts = [(str(c), self._monomial_str(e)) for e, c in items]
        return format_terms(parts)

    def __repr__(self) -> str:
        return f"Poly({self})"


def jacobian_entries(f: Poly) -> list[Poly]:
    """Partial derivatives of f in variable order; rejects constants."""
    if f.is_constant():
        raise DegenerateInput("jacobian of a constant polynomial")
    return f.gradient()
