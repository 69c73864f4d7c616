"""Exact linear algebra over a :class:`~tetrahedral.scalars.Field`.

Dense routines use numpy arrays: ``int64`` residues for F_p (entries stay
below p, so a single product fits comfortably) and ``object`` arrays of
``Fraction`` for Q.  The sparse echelon form works on ``dict`` rows and is
what the large rank computations use.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .scalars import Field

# ---------------------------------------------------------------- dense


def zeros(field: Field, shape) -> np.ndarray:
    if field.is_prime:
        return np.zeros(shape, dtype=np.int64)
    out = np.empty(shape, dtype=object)
    out.fill(Fraction(0))
    return out


def identity(field: Field, n: int) -> np.ndarray:
    out = zeros(field, (n, n))
    for i in range(n):
        out[i, i] = field.one
    return out


def as_matrix(field: Field, rows, shape=None) -> np.ndarray:
    """Convert nested lists (ints, Fractions, raw values) to a field matrix."""
    if field.is_prime:
        arr = np.array(rows, dtype=object)
        if shape is not None:
            arr = arr.reshape(shape)
        return np.vectorize(field.canon, otypes=[np.int64])(arr) if arr.size else zeros(field, arr.shape)
    arr = np.array(rows, dtype=object)
    if shape is not None:
        arr = arr.reshape(shape)
    out = zeros(field, arr.shape)
    for idx in np.ndindex(arr.shape):
        out[idx] = Fraction(arr[idx])
    return out


def reduce(field: Field, a: np.ndarray) -> np.ndarray:
    """Bring an array back to canonical residues (no-op over Q)."""
    if field.is_prime:
        return a % field.p
    return a


def matmul(field: Field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] == 0 or b.shape[0] == 0:
        return zeros(field, (a.shape[0], b.shape[1]))
    if field.is_prime:
        p = field.p
        # chunk the inner dimension so partial sums stay below 2**63
        step = max(1, (2**62) // (p * p))
        acc = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        for k in range(0, a.shape[1], step):
            acc = (acc + a[:, k:k + step] @ b[k:k + step, :]) % p
        return acc
    return a.dot(b)


def rref(field: Field, m: np.ndarray):
    """Reduced row echelon form; returns ``(R, pivot_columns)``."""
    a = m.copy()
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    p = field.p
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if len(nz) == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = field.inv(a[r, c])
        a[r] = a[r] * inv
        if field.is_prime:
            a[r] %= p
        col = a[:, c].copy()
        col[r] = 0
        others = np.nonzero(col)[0]
        if len(others):
            a[others] = a[others] - np.outer(col[others], a[r])
            if field.is_prime:
                a[others] %= p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(field: Field, m: np.ndarray) -> int:
    if m.size == 0:
        return 0
    return len(rref(field, m)[1])


def nullspace(field: Field, m: np.ndarray) -> np.ndarray:
    """Rows spanning ``{x : m @ x = 0}``."""
    ncols = m.shape[1]
    if m.shape[0] == 0:
        return identity(field, ncols)
    r, piv = rref(field, m)
    free = [c for c in range(ncols) if c not in set(piv)]
    out = zeros(field, (len(free), ncols))
    for k, fc in enumerate(free):
        out[k, fc] = field.one
        for i, pc in enumerate(piv):
            out[k, pc] = field.neg(r[i, fc])
    return out


def left_nullspace(field: Field, m: np.ndarray) -> np.ndarray:
    """Rows spanning ``{y : y @ m = 0}``."""
    return nullspace(field, m.T.copy())


def row_space_basis(field: Field, m: np.ndarray) -> np.ndarray:
    r, piv = rref(field, m)
    return r[: len(piv)].copy()


def solve_left(field: Field, basis: np.ndarray, vectors: np.ndarray) -> np.ndarray | None:
    """Coordinates ``c`` with ``c @ basis == vectors`` (rows), or None.

    ``basis`` must have independent rows.
    """
    k = basis.shape[0]
    if vectors.shape[0] == 0:
        return zeros(field, (0, k))
    aug = np.concatenate([basis.T, vectors.T], axis=1)
    r, piv = rref(field, aug)
    if any(c >= k for c in piv):
        return None
    if len(piv) < k:
        raise ValueError("basis rows are dependent")
    return r[:k, k:].T.copy()


def solve_left_any(field: Field, m: np.ndarray, vector: np.ndarray) -> np.ndarray | None:
    """Some ``c`` with ``c @ m == vector``, or None; ``m`` may have dependent rows."""
    k = m.shape[0]
    aug = np.concatenate([m.T, vector.reshape(-1, 1)], axis=1)
    r, piv = rref(field, aug)
    if k in piv:
        return None
    c = zeros(field, (k,))
    for row, col in enumerate(piv):
        c[col] = r[row, k]
    return c


def inverse(field: Field, m: np.ndarray) -> np.ndarray:
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    aug = np.concatenate([m, identity(field, n)], axis=1)
    r, piv = rref(field, aug)
    if piv[:n] != list(range(n)) or len(piv) < n or piv[n - 1] != n - 1:
        raise ZeroDivisionError("matrix is singular")
    return r[:, n:].copy()


def is_invertible(field: Field, m: np.ndarray) -> bool:
    return m.shape[0] == m.shape[1] and rank(field, m) == m.shape[0]


def complement_columns(field: Field, m: np.ndarray) -> list[int]:
    """Standard basis indices completing the row space of ``m``."""
    if m.shape[0] == 0:
        return list(range(m.shape[1]))
    _, piv = rref(field, m)
    ps = set(piv)
    return [c for c in range(m.shape[1]) if c not in ps]


# ---------------------------------------------------------------- sparse


class SparseEchelon:
    """Incremental echelon form of sparse ``dict`` rows.

    The lead of a row is its largest key; every stored row is normalised to
    lead coefficient 1.  Rows are only reduced against earlier pivots, which
    is enough for rank, membership and the back-substitution normal form.
    """

    def __init__(self, field: Field):
        self.field = field
        self.pivots: dict[int, dict] = {}

    def __len__(self):
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        """Reduce ``row`` in place against the stored pivots."""
        pivots = self.pivots
        if self.field.is_prime:
            p = self.field.p
            while row:
                lead = max(row)
                prow = pivots.get(lead)
                if prow is None:
                    return row
                c = row[lead]
                for k, v in prow.items():
                    nv = (row.get(k, 0) - c * v) % p
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
            return row
        while row:
            lead = max(row)
            prow = pivots.get(lead)
            if prow is None:
                return row
            c = row[lead]
            for k, v in prow.items():
                nv = row.get(k, 0) - c * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        return row

    def add(self, row: dict, copy: bool = True) -> dict | None:
        """Insert a row; returns the stored pivot row, or None if dependent.

        With ``copy=False`` the caller hands over ``row``, which may be
        modified."""
        row = self.reduce(dict(row) if copy else row)
        if not row:
            return None
        lead = max(row)
        c = row[lead]
        if c != 1:
            inv = self.field.inv(c)
            mul = self.field.mul
            row = {k: mul(v, inv) for k, v in row.items()}
        self.pivots[lead] = row
        return row

    def contains(self, row: dict) -> bool:
        return not self.reduce(dict(row))


def sparse_rank(field: Field, rows) -> int:
    ech = SparseEchelon(field)
    for r in rows:
        if r:
            ech.add(r)
    return len(ech)
