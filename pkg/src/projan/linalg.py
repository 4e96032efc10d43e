"""Rank and subspace helpers over Scalar matrices.

Matrices of exact scalars get exact Gaussian elimination; anything with a
float entry falls back to numpy SVD with a relative singular-value cutoff.
"""

from __future__ import annotations

import numpy as np

from .scalars import TAU_RANK, Scalar

ScalarMatrix = list[list[Scalar]]


def to_ndarray(rows: ScalarMatrix) -> np.ndarray:
    return np.array([[complex(x) for x in row] for row in rows], dtype=complex)


def all_exact(rows: ScalarMatrix) -> bool:
    return all(x.exact for row in rows for x in row)


def exact_rank(rows: ScalarMatrix) -> int:
    """Rank by fraction-free-ish Gaussian elimination over Gaussian rationals."""
    m = [list(row) for row in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, nrows) if m[r][col]), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        pv = m[row][col]
        for r in range(row + 1, nrows):
            if m[r][col]:
                factor = m[r][col] / pv
                m[r] = [a - factor * b for a, b in zip(m[r], m[row])]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def numeric_rank(rows: ScalarMatrix, tol: float = TAU_RANK) -> int:
    a = to_ndarray(rows)
    if a.size == 0:
        return 0
    s = np.linalg.svd(a, compute_uv=False)
    if s.size == 0 or s[0] == 0:
        return 0
    return int(np.sum(s > tol * s[0]))


def rank(rows: ScalarMatrix, tol: float = TAU_RANK) -> int:
    if not rows or not rows[0]:
        return 0
    if all_exact(rows):
        return exact_rank(rows)
    return numeric_rank(rows, tol)


def orthonormal_row_basis(a: np.ndarray, tol: float = TAU_RANK) -> np.ndarray:
    """Orthonormal basis of the row space, via SVD right-singular vectors."""
    a = np.asarray(a, dtype=complex)
    if a.size == 0:
        return np.zeros((0, a.shape[1] if a.ndim == 2 else 0), dtype=complex)
    _, s, vh = np.linalg.svd(a)
    if s.size == 0 or s[0] == 0:
        return np.zeros((0, a.shape[1]), dtype=complex)
    keep = s > tol * s[0]
    return vh[: int(np.sum(keep))]

def residual_from_span(basis: np.ndarray, v: np.ndarray) -> float:
    """Relative distance of v from the row span of an orthonormal basis."""
    v = np.asarray(v, dtype=complex)
    n = np.linalg.norm(v)
    if n == 0:
        return 0.0
    if basis.shape[0] == 0:
        return 1.0
    proj = basis.conj() @ v
    return float(np.linalg.norm(v - basis.T @ proj) / n)


def null_space(a: np.ndarray, tol: float = TAU_RANK) -> np.ndarray:
    """Orthonormal basis (as rows) of the kernel of a."""
    a = np.asarray(a, dtype=complex)
    u, s, vh = np.linalg.svd(a)
    del u
    if s.size and s[0] > 0:
        nz = int(np.sum(s > tol * s[0]))
    else:
        nz = 0
    return vh[nz:]


def same_row_space(a: ScalarMatrix, b: ScalarMatrix, tol: float) -> bool:
    """Whether two scalar matrices span the same row space, numerically."""
    ba = orthonormal_row_basis(to_ndarray(a))
    bb = orthonormal_row_basis(to_ndarray(b))
    if ba.shape[0] != bb.shape[0]:
        return False
    return all(residual_from_span(bb, v) < tol for v in ba) and \
        all(residual_from_span(ba, v) < tol for v in bb)
