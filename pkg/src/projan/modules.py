"""Generator matrices for a module and for its doubles on X x X.

A module M inside O^p with generators g_1..g_r is stored as the p x r
matrix [M] whose columns are the generators. The doubled constructions
live over the doubled variable list (z_1..z_n, z_1'..z_n') and produce a
2p x C matrix whose layout depends on the variant:

    B        C = r(n+1)   doubles plus columns (0, (z_i - z_i') g_j o pi2)
    BP       C = r(n+1)   doubles plus columns ((z_i - z_i') g_j o pi1, 0)
    BPP      C = r(n+1)   doubles plus the doubles of z_i g_j
    TWO_M    C = 2r       block diagonal pi1* M (+) pi2* M
    D_MINUS  C = r        doubles of the fixed generators only
    D_HAT    C = 2r       doubles plus the block (0, pi2* M)
"""

from __future__ import annotations

import enum
import threading

from .errors import DimensionMismatch, SamplerExhausted
from .linalg import rank as matrix_rank
from .poly import Poly, jacobian_entries
from .scalars import Scalar

ScalarMatrix = list[list[Scalar]]


class Variant(enum.Enum):
    B = "B"
    BP = "Bp"
    BPP = "Bpp"
    TWO_M = "2M"
    D_MINUS = "Dminus"
    D_HAT = "Dhat"

    @staticmethod
    def parse(text: str) -> "Variant":
        for v in Variant:
            if v.value.lower() == text.lower() or v.name.lower() == text.lower():
                return v
        raise ValueError(f"unknown variant {text!r}")


def primed(name: str) -> str:
    return name + "'"


class ModuleGens:
    """A p x r generator matrix of polynomials over the ambient variables."""

    def __init__(self, p: int, vars, matrix: list[list[Poly]]):
        self.p = p
        self.vars = tuple(vars)
        if len(matrix) != p or not matrix or any(len(row) != len(matrix[0]) for row in matrix):
            raise DimensionMismatch("generator matrix shape is inconsistent")
        self.r = len(matrix[0])
        if self.r < 1:
            raise DimensionMismatch("need at least one generator")
        self.matrix = matrix
        self._generic_rank: int | None = None
        self._rank_histogram: dict[int, int] | None = None
        self._rank_lock = threading.Lock()

    @property
    def n(self) -> int:
        return len(self.vars)

    def eval(self, point) -> ScalarMatrix:
        if len(point) != self.n:
            raise DimensionMismatch(
                f"point of length {len(point)} for {self.n} variables")
        return [[entry.eval(point) for entry in row] for row in self.matrix]

    def generic_rank(self, sampler=None, samples: int = 25) -> int:
        """Max rank over sampled points; cached after the first computation."""
        with self._rank_lock:
            if self._generic_rank is None:
                if sampler is None:
                    raise SamplerExhausted("no sampler supplied for generic rank")
                self._generic_rank, self._rank_histogram = _max_rank(
                    self.eval, sampler, samples)
            return self._generic_rank

    @property
    def rank_histogram(self) -> dict[int, int] | None:
        return self._rank_histogram


class DoubleGens:
    """A 2p x C generator matrix over the doubled variables."""

    def __init__(self, base: ModuleGens, variant: Variant,
                 vars, matrix: list[list[Poly]]):
        self.base = base
        self.variant = variant
        self.vars = tuple(vars)
        self.matrix = matrix
        self.rows = len(matrix)
        self.cols = len(matrix[0])
        self._generic_rank: int | None = None
        self._rank_histogram: dict[int, int] | None = None
        self._rank_lock = threading.Lock()

    def eval(self, point) -> ScalarMatrix:
        if len(point) != len(self.vars):
            raise DimensionMismatch(
                f"point of length {len(point)} for {len(self.vars)} variables")
        return [[entry.eval(point) for entry in row] for row in self.matrix]

    def eval_pair(self, x, xp) -> ScalarMatrix:
        return self.eval(list(x) + list(xp))

    def generic_rank(self, sampler=None, samples: int = 25) -> int:
        with self._rank_lock:
            if self._generic_rank is None:
                if sampler is None:
                    raise SamplerExhausted("no sampler supplied for generic rank")
                self._generic_rank, self._rank_histogram = _max_rank(
                    self.eval, sampler, samples)
            return self._generic_rank

    @property
    def rank_histogram(self) -> dict[int, int] | None:
        return self._rank_histogram


def _max_rank(eval_fn, sampler, samples: int) -> tuple[int, dict[int, int]]:
    histogram: dict[int, int] = {}
    for i in range(samples):
        point = sampler(i)
        if point is None:
            raise SamplerExhausted(f"sampler returned no point at index {i}")
        r = matrix_rank(eval_fn(point))
        histogram[r] = histogram.get(r, 0) + 1
    return max(histogram), histogram


def jacobian_module(f: Poly) -> ModuleGens:
    """The 1 x n matrix of partial derivatives of a hypersurface equation."""
    return ModuleGens(1, f.vars, [jacobian_entries(f)])


def double_variables(vars) -> tuple[str, ...]:
    vars = tuple(vars)
    return vars + tuple(primed(v) for v in vars)


def double_gens(m: ModuleGens, variant: Variant | str) -> DoubleGens:
    """Generator matrix of the chosen double construction of m."""
    if isinstance(variant, str):
        variant = Variant.parse(variant)
    dvars = double_variables(m.vars)
    prime_map = {v: primed(v) for v in m.vars}

    def lift1(entry: Poly) -> Poly:
        return entry.with_vars(dvars)

    def lift2(entry: Poly) -> Poly:
        return entry.with_vars(dvars, mapping=prime_map)

    top = [[lift1(e) for e in row] for row in m.matrix]
    bot = [[lift2(e) for e in row] for row in m.matrix]
    zero = Poly.zero(dvars)
    p, r, n = m.p, m.r, m.n
    secants = [Poly.variable(dvars, v) - Poly.variable(dvars, primed(v))
               for v in m.vars]

    rows: list[list[Poly]] = []
    if variant is Variant.D_MINUS:
        for i in range(p):
            rows.append(list(top[i]))
        for i in range(p):
            rows.append(list(bot[i]))
    elif variant is Variant.TWO_M:
        for i in range(p):
            rows.append(list(top[i]) + [zero] * r)
        for i in range(p):
            rows.append([zero] * r + list(bot[i]))
    elif variant is Variant.D_HAT:
        for i in range(p):
            rows.append(list(top[i]) + [zero] * r)
        for i in range(p):
            rows.append(list(bot[i]) + list(bot[i]))
    elif variant is Variant.B:
        for i in range(p):
            rows.append(list(top[i]) + [zero] * (n * r))
        for i in range(p):
            row = list(bot[i])
            for s in secants:
                row.extend(s * e for e in bot[i])
            rows.append(row)
    elif variant is Variant.BP:
        for i in range(p):
            row = list(top[i])
            for s in secants:
                row.extend(s * e for e in top[i])
            rows.append(row)
        for i in range(p):
            rows.append(list(bot[i]) + [zero] * (n * r))
    elif variant is Variant.BPP:
        zs = [Poly.variable(dvars, v) for v in m.vars]
        zps = [Poly.variable(dvars, primed(v)) for v in m.vars]
        for i in range(p):
            row = list(top[i])
            for z in zs:
                row.extend(z * e for e in top[i])
            rows.append(row)
        for i in range(p):
            row = list(bot[i])
            for zp in zps:
                row.extend(zp * e for e in bot[i])
            rows.append(row)
    else:  # pragma: no cover
        raise ValueError(f"unhandled variant {variant}")
    return DoubleGens(m, variant, dvars, rows)


def eval_matrix(obj: ModuleGens | DoubleGens, point) -> ScalarMatrix:
    """Entrywise evaluation of a generator matrix at a point."""
    return obj.eval(point)


def singular_locus_test(m: ModuleGens, d: DoubleGens, x, xp,
                        same_point: bool | None = None) -> dict:
    """Compare the observed singular locus of the double with the predicted one.

    in_sigma: rank[M_D(x, x')] < 2k.
    predicted: x = x', or x or x' lies in the singular set of M.
    Generic ranks must already be cached on both objects.
    """
    k = m._generic_rank
    two_k = d._generic_rank
    if k is None or two_k is None:
        raise SamplerExhausted("generic ranks must be computed first")
    rm_x = matrix_rank(m.eval(list(x)))
    rm_xp = matrix_rank(m.eval(list(xp)))
    rd = matrix_rank(d.eval_pair(x, xp))
    if same_point is None:
        same_point = all(
            complex(Scalar.coerce(a)) == complex(Scalar.coerce(b))
            for a, b in zip(x, xp))
    return {
        "in_sigma": rd < two_k,
        "predicted": bool(same_point or rm_x < k or rm_xp < k),
        "rank_double": rd,
        "rank_x": rm_x,
        "rank_xp": rm_xp,
    }
