"""Projective points and projective linear subspaces.

Points carry homogeneous Scalar coordinates normalized so that the first
coordinate of maximal modulus is 1; equality is exact proportionality when
both sides are exact, otherwise angular (Fubini-Study) distance below
TAU_PROJ. Subspaces keep an orthonormalized numeric basis and answer
membership queries by projection residual.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DimensionMismatch, ZeroVectorLimit
from .linalg import orthonormal_row_basis, residual_from_span
from .scalars import TAU_PROJ, Scalar


class ProjPoint:
    """A point of P^(m-1), stored as m normalized homogeneous coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = [Scalar.coerce(c) for c in coords]
        if not coords:
            raise DimensionMismatch("projective point needs coordinates")
        mags = [abs(c) for c in coords]
        top = max(mags)
        if top == 0.0:
            raise ZeroVectorLimit("all homogeneous coordinates are zero")
        pivot = coords[mags.index(top)]
        self.coords = tuple(c / pivot for c in coords)

    @property
    def dim_ambient(self) -> int:
        return len(self.coords)

    @property
    def exact(self) -> bool:
        return all(c.exact for c in self.coords)

    def as_array(self) -> np.ndarray:
        return np.array([complex(c) for c in self.coords], dtype=complex)

    def unit_array(self) -> np.ndarray:
        v = self.as_array()
        return v / np.linalg.norm(v)

    def angular_distance(self, other: "ProjPoint") -> float:
        """Fubini-Study distance: arccos |<u, v>| for unit representatives."""
        if self.dim_ambient != other.dim_ambient:
            raise DimensionMismatch("points live in different ambient spaces")
        inner = abs(np.vdot(self.unit_array(), other.unit_array()))
        return math.acos(min(1.0, float(inner)))

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        if self.dim_ambient != other.dim_ambient:
            return False
        if self.exact and other.exact:
            # exact proportionality: normalized representatives must agree
            return all(a == b for a, b in zip(self.coords, other.coords))
        return self.angular_distance(other) < TAU_PROJ

    def __hash__(self):
        raise TypeError("projective points are not hashable")

    def blocks(self, sizes) -> list[tuple[Scalar, ...]]:
        if sum(sizes) != self.dim_ambient:
            raise DimensionMismatch("block sizes do not cover the coordinates")
        out = []
        i = 0
        for s in sizes:
            out.append(self.coords[i:i + s])
            i += s
        return out

    def serialize(self) -> list[list[float]]:
        return [[float(c.re), float(c.im)] for c in self.coords]

    def __str__(self):
        return "[" + ", ".join(str(c) for c in self.coords) + "]"

    def __repr__(self):
        return f"ProjPoint({self})"


class ProjSubspace:
    """A projective linear subspace, kept as an orthonormal numeric basis."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: np.ndarray):
        self.ambient_dim = ambient_dim
        self.basis = basis

    @staticmethod
    def from_points(points, ambient_dim: int | None = None,
                    tol: float = TAU_PROJ) -> "ProjSubspace":
        points = list(points)
        if not points and ambient_dim is None:
            raise DimensionMismatch("empty subspace needs an ambient dimension")
        if points:
            rows = np.array([p.as_array() if isinstance(p, ProjPoint)
                             else np.asarray(p, dtype=complex) for p in points])
            m = rows.shape[1]
            if ambient_dim is not None and ambient_dim != m:
                raise DimensionMismatch("ambient dimension mismatch")
            return ProjSubspace(m, orthonormal_row_basis(rows, tol))
        return ProjSubspace(ambient_dim, np.zeros((0, ambient_dim), dtype=complex))

    @property
    def dim(self) -> int:
        """Projective dimension (vector dimension minus one)."""
        return self.basis.shape[0] - 1

    @property
    def vector_dim(self) -> int:
        return self.basis.shape[0]

    def distance(self, point: ProjPoint) -> float:
        if point.dim_ambient != self.ambient_dim:
            raise DimensionMismatch("point/subspace ambient mismatch")
        return residual_from_span(self.basis, point.unit_array())

    def contains(self, point: ProjPoint, tol: float = TAU_PROJ) -> bool:
        return self.distance(point) < tol

    def contains_subspace(self, other: "ProjSubspace", tol: float = TAU_PROJ) -> bool:
        return all(residual_from_span(self.basis, v) < tol for v in other.basis)

    def __eq__(self, other):
        if not isinstance(other, ProjSubspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim
                and self.vector_dim == other.vector_dim
                and self.contains_subspace(other))

    def serialize(self) -> list[list[list[float]]]:
        return [[[float(z.real), float(z.imag)] for z in row] for row in self.basis]

    def __repr__(self):
        return f"ProjSubspace(dim={self.dim}, ambient={self.ambient_dim})"


def join(a: ProjSubspace, b: ProjSubspace) -> ProjSubspace:
    """Projective span of the union: the join of two linear subspaces."""
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch("join requires a common ambient space")
    stacked = np.vstack([a.basis, b.basis])
    return ProjSubspace(a.ambient_dim, orthonormal_row_basis(stacked))
