"""Exact Gauss-Jordan elimination over any field.

Entries may be :class:`~qcat.exactfield.ScalarQ` or :class:`fractions.Fraction`;
the only requirements are ``+ - * /`` and truthiness meaning "nonzero".
Matrices are lists of rows.
"""
from __future__ import annotations

from .errors import ConsistencyError


def _one_like(x):
    return type(x)(1)


def _zero_like(x):
    return type(x)(0)


def _sample(A):
    for row in A:
        for x in row:
            return x
    raise ValueError("empty matrix")


def row_reduce(A):
    """Reduced row echelon form of ``A``; returns ``(rref, pivot_columns)``."""
    M = [list(row) for row in A]
    nrows = len(M)
    ncols = len(M[0]) if M else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv if x else x for x in M[r]]
        for i in range(nrows):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b if b else a for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return M, pivots


def rank(A):
    return len(row_reduce(A)[1]) if A else 0


def det(A):
    n = len(A)
    if n == 0:
        return 1
    M = [list(row) for row in A]
    out = _one_like(_sample(M))
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c]), None)
        if p is None:
            return _zero_like(out)
        if p != c:
            M[c], M[p] = M[p], M[c]
            out = -out
        piv = M[c][c]
        out = out * piv
        inv = 1 / piv
        for i in range(c + 1, n):
            if M[i][c]:
                f = M[i][c] * inv
                M[i] = [a - f * b if b else a for a, b in zip(M[i], M[c])]
    return out


def solve(A, B):
    """Solve ``A X = B`` for square nonsingular ``A``; ``B`` is a list of rows."""
    n = len(A)
    aug = [list(A[i]) + list(B[i]) for i in range(n)]
    R, pivots = row_reduce(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in R[:n]]


def inverse(A):
    n = len(A)
    one = _one_like(_sample(A))
    zero = _zero_like(one)
    eye = [[one if i == j else zero for j in range(n)] for i in range(n)]
    return solve(A, eye)


def solve_consistent(A, B):
    """Solve an overdetermined but consistent ``A X = B`` with full column rank.

    Raises :class:`ConsistencyError` on rank defect or inconsistency.
    """
    ncols = len(A[0])
    aug = [list(a) + list(b) for a, b in zip(A, B)]
    R, pivots = row_reduce(aug)
    if pivots[:ncols] != list(range(ncols)):
        raise ConsistencyError("coefficient matrix is rank deficient")
    if len(pivots) > ncols:
        raise ConsistencyError("linear system is inconsistent")
    return [row[ncols:] for row in R[:ncols]]


def nullspace(A, ncols=None):
    """Basis of ``{x : A x = 0}`` as a list of vectors."""
    if ncols is None:
        ncols = len(A[0])
    if not A:
        raise ValueError("nullspace of a matrix with no rows needs an explicit sample")
    R, pivots = row_reduce(A)
    one = _one_like(_sample(A))
    zero = _zero_like(one)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [zero] * ncols
        x[f] = one
        for r, p in enumerate(pivots):
            if R[r][f]:
                x[p] = -R[r][f]
        basis.append(x)
    return basis
