"""Exact linear algebra over the rationals.

Matrices are numpy arrays of dtype ``object`` holding :class:`fractions.Fraction`
entries, which keeps zero-sized shapes (``(0, 3)`` etc.) well defined.  All
reductions use a fixed pivot order so that every basis produced here is
reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

ZERO = Fraction(0)
ONE = Fraction(1)


def matrix(rows: Iterable[Iterable], shape: tuple[int, int] | None = None) -> np.ndarray:
    """Build an exact matrix from nested iterables (or an existing array)."""
    rows = [[Fraction(x) for x in row] for row in rows]
    if shape is None:
        shape = (len(rows), len(rows[0]) if rows else 0)
    out = np.empty(shape, dtype=object)
    if shape[0] and shape[1]:
        out[:, :] = rows
    return out


def zeros(r: int, c: int) -> np.ndarray:
    out = np.empty((r, c), dtype=object)
    out.fill(ZERO)
    return out


def eye(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = ONE
    return out


def column(values: Sequence) -> np.ndarray:
    out = np.empty((len(values), 1), dtype=object)
    for i, v in enumerate(values):
        out[i, 0] = Fraction(v)
    return out


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    if a.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1])
    return a.dot(b)


def is_zero(a: np.ndarray) -> bool:
    return all(x == 0 for x in a.flat)


def equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def rref(a: np.ndarray) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot columns)."""
    rows = [list(r) for r in a.tolist()] if a.size else [[] for _ in range(a.shape[0])]
    n_rows, n_cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        p = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pr = rows[r]
        inv = 1 / Fraction(pr[c])
        if inv != 1:
            rows[r] = pr = [x * inv for x in pr]
        for i in range(n_rows):
            if i != r:
                f = rows[i][c]
                if f != 0:
                    ri = rows[i]
                    rows[i] = [x - f * y for x, y in zip(ri, pr)]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return len(rref(a)[1])


def nullspace(a: np.ndarray) -> np.ndarray:
    """Basis of the kernel as the columns of an (n, k) matrix."""
    n = a.shape[1]
    rows, pivots = rref(a)
    free = [c for c in range(n) if c not in set(pivots)]
    out = zeros(n, len(free))
    for j, f in enumerate(free):
        out[f, j] = ONE
        for r, p in enumerate(pivots):
            out[p, j] = -rows[r][f]
    return out


def column_basis(a: np.ndarray) -> np.ndarray:
    """Pivot columns of ``a``: a basis of its column space."""
    _, pivots = rref(a)
    return a[:, pivots] if pivots else zeros(a.shape[0], 0)


def complement_coordinates(a: np.ndarray) -> list[int]:
    """Standard basis indices completing the column space of ``a`` to the whole space."""
    m = a.shape[0]
    aug = np.concatenate([a, eye(m)], axis=1) if a.shape[1] else eye(m)
    _, pivots = rref(aug)
    return [p - a.shape[1] for p in pivots if p >= a.shape[1]]


def inverse(a: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    if n == 0:
        return zeros(0, 0)
    rows, pivots = rref(np.concatenate([a, eye(n)], axis=1))
    if pivots[:n] != list(range(n)) or (len(pivots) > n and pivots[n] < n):
        raise ValueError("singular matrix")
    return matrix([r[n:] for r in rows], shape=(n, n))


def solve(a: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    """One solution of ``a x = b`` (free variables set to 0), or None if inconsistent."""
    n = a.shape[1]
    aug = np.concatenate([a, b], axis=1)
    rows, pivots = rref(aug)
    if any(p >= n for p in pivots):
        return None
    x = zeros(n, b.shape[1])
    for r, p in enumerate(pivots):
        x[p, :] = rows[r][n:]
    return x


def cancel_columns(a: np.ndarray) -> np.ndarray:
    """Scale each nonzero column so its first nonzero entry is 1."""
    out = a.copy()
    for j in range(a.shape[1]):
        lead = next((x for x in a[:, j] if x != 0), None)
        if lead is not None and lead != 1:
            out[:, j] = [x / lead for x in a[:, j]]
    return out


class Coordinates:
    """Coordinate extraction with respect to a fixed basis (columns of ``basis``).

    Precomputes a left inverse supported on a set of pivot rows, so that
    ``coords(v)`` is one small matrix product.  ``v`` must lie in the span;
    pass ``check=True`` to verify.
    """

    def __init__(self, basis: np.ndarray):
        self.basis = basis
        n, k = basis.shape
        self.dim = k
        if k == 0:
            self._rows: list[int] = []
            self._left = zeros(0, 0)
            return
        _, rows = rref(basis.T.copy())
        if len(rows) != k:
            raise ValueError("basis columns are linearly dependent")
        self._rows = rows
        self._left = inverse(basis[rows, :])

    def coords(self, v: np.ndarray, check: bool = False) -> np.ndarray:
        v = v.reshape(-1, 1) if v.ndim == 1 else v
        if self.dim == 0:
            out = zeros(0, v.shape[1])
        else:
            out = matmul(self._left, v[self._rows, :])
        if check and not equal(matmul(self.basis, out), v):
            raise ValueError("vector is not in the span of the basis")
        return out


def integer_matrix(a: np.ndarray) -> list[list[int]]:
    out = []
    for row in a.tolist():
        ints = []
        for x in row:
            x = Fraction(x)
            if x.denominator != 1:
                raise ValueError(f"non-integral entry {x}")
            ints.append(int(x))
        out.append(ints)
    return out


def determinant(a: np.ndarray) -> Fraction:
    """Exact determinant by fraction-preserving elimination."""
    n = a.shape[0]
    rows = [[Fraction(x) for x in r] for r in a.tolist()]
    det = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if p is None:
            return ZERO
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            det = -det
        det *= rows[c][c]
        for i in range(c + 1, n):
            f = rows[i][c] / rows[c][c]
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return det
