"""Exact rational matrices.

Matrices are numpy object arrays holding :class:`fractions.Fraction` entries.
Row reduction is delegated to sympy's ``DomainMatrix`` over ``QQ``.
"""

from fractions import Fraction

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def zeros(rows, cols):
    out = np.empty((rows, cols), dtype=object)
    out.fill(Fraction(0))
    return out


def eye(n):
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def qmat(rows, cols=None):
    """Build a Fraction matrix from nested sequences."""
    rows = [list(r) for r in rows]
    if cols is None:
        cols = len(rows[0]) if rows else 0
    out = zeros(len(rows), cols)
    for i, r in enumerate(rows):
        if len(r) != cols:
            raise ValueError("ragged matrix")
        for j, x in enumerate(r):
            out[i, j] = Fraction(x)
    return out


def hstack(blocks, rows):
    blocks = [b for b in blocks]
    if not blocks:
        return zeros(rows, 0)
    return np.concatenate(blocks, axis=1) if len(blocks) > 1 else blocks[0].copy()


def vstack(blocks, cols):
    if not blocks:
        return zeros(0, cols)
    return np.concatenate(blocks, axis=0) if len(blocks) > 1 else blocks[0].copy()


def is_zero(a):
    return all(x == 0 for x in a.flat)


def _to_dm(a):
    r, c = a.shape
    return DomainMatrix(
        [[QQ(x.numerator, x.denominator) if isinstance(x, Fraction) else QQ(x) for x in row]
         for row in a.tolist()],
        (r, c),
        QQ,
    )


def _from_q(x):
    return Fraction(int(x.numerator), int(x.denominator))


def rref(a):
    """Reduced row echelon form and pivot columns."""
    r, c = a.shape
    if r == 0 or c == 0:
        return zeros(0, c), ()
    red, pivots = _to_dm(a).to_sparse().rref()
    rows = red.to_dense().to_list()[: len(pivots)]
    out = zeros(len(pivots), c)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if x:
                out[i, j] = _from_q(x)
    return out, tuple(pivots)


def rank(a):
    if a.shape[0] == 0 or a.shape[1] == 0:
        return 0
    return len(rref(a)[1])


def nullspace(a):
    """Columns spanning ``{x : a x = 0}`` (shape ``(ncols, k)``)."""
    c = a.shape[1]
    red, pivots = rref(a)
    free = [j for j in range(c) if j not in pivots]
    out = zeros(c, len(free))
    for k, f in enumerate(free):
        out[f, k] = Fraction(1)
        for i, p in enumerate(pivots):
            out[p, k] = -red[i, f]
    return out


def column_basis(a):
    """Independent columns of ``a`` spanning its column space."""
    if a.shape[1] == 0:
        return zeros(a.shape[0], 0)
    _, pivots = rref(a)
    return a[:, list(pivots)].copy()


def solve(a, b):
    """One solution ``x`` of ``a x = b`` (``b`` a matrix), or ``None``.

    Free variables are set to zero, so the answer is deterministic.
    """
    r, c = a.shape
    k = b.shape[1]
    if r == 0:
        return zeros(c, k)
    aug = np.concatenate([a, b], axis=1)
    red, pivots = rref(aug)
    if any(p >= c for p in pivots):
        return None
    x = zeros(c, k)
    for i, p in enumerate(pivots):
        for j in range(k):
            x[p, j] = red[i, c + j]
    return x


def complement_basis(sub, n):
    """Standard basis vectors completing the columns of ``sub`` to a basis of Q^n.

    Returns the list of chosen coordinate indices.
    """
    k = sub.shape[1]
    _, pivots = rref(np.concatenate([sub, eye(n)], axis=1))
    return [p - k for p in pivots if p >= k]


def coordinates(basis, vectors):
    """Express the columns of ``vectors`` in the (independent) columns of ``basis``."""
    x = solve(basis, vectors)
    if x is None:
        raise ValueError("vector outside the span")
    return x


def fmt(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
