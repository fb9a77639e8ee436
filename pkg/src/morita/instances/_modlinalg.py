"""Exact linear algebra over a prime field, on plain integer tuples.

Matrices are tuples of row tuples.  Everything is reduced mod p on the way
in, so equality of matrices is equality of canonical forms.  No floats.
"""

from __future__ import annotations

from typing import Sequence

Mat = tuple[tuple[int, ...], ...]


def normalize(rows: Sequence[Sequence[int]], p: int) -> Mat:
    return tuple(tuple(v % p for v in row) for row in rows)


def zeros(r: int, c: int) -> Mat:
    return tuple((0,) * c for _ in range(r))


def eye(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def add(a: Mat, b: Mat, p: int) -> Mat:
    return tuple(tuple((x + y) % p for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def sub(a: Mat, b: Mat, p: int) -> Mat:
    return tuple(tuple((x - y) % p for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mul(a: Mat, b: Mat, p: int) -> Mat:
    # a: m x n, b: n x k
    n = len(b)
    k = len(b[0]) if n else (0 if not a or not a[0] else None)
    if k is None:
        k = 0
    bt = list(zip(*b)) if n else [(0,) * n] * k  # columns of b
    out = []
    for row in a:
        out.append(tuple(sum(x * y for x, y in zip(row, col)) % p for col in bt)
                   if n else (0,) * k)
    return tuple(out)


def transpose(a: Mat) -> Mat:
    if not a:
        return ()
    return tuple(zip(*a))


def kron(a: Mat, b: Mat, p: int) -> Mat:
    """Kronecker product in lexicographic basis order: index (i,j) -> i*|b|+j."""
    ra, rb = len(a), len(b)
    ca = len(a[0]) if ra else 0
    cb = len(b[0]) if rb else 0
    out = []
    for i1 in range(ra):
        for i2 in range(rb):
            out.append(tuple((a[i1][j1] * b[i2][j2]) % p
                             for j1 in range(ca) for j2 in range(cb)))
    return tuple(out) if ra * rb else ()


def rref(rows: Sequence[Sequence[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(mat)) if mat[i][c] % p), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = pow(mat[r][c], -1, p)
        mat[r] = [(v * inv) % p for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] % p:
                f = mat[i][c] % p
                mat[i] = [(v - f * w) % p for v, w in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return [row for row in mat[:r]], pivots


def rank(a: Mat, p: int) -> int:
    return len(rref(a, p)[1])


def inverse(a: Mat, p: int) -> Mat:
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("not square")
    aug = [list(row) + list(idr) for row, idr in zip(a, eye(n))]
    red, piv = rref(aug, p)
    if piv[:n] != list(range(n)):
        raise ValueError("singular")
    return tuple(tuple(row[n:]) for row in red)


def nullspace(a: Mat, p: int, ncols: int) -> Mat:
    """Canonical kernel basis as a matrix whose columns are the basis.

    Basis vectors are indexed by the free columns in order; vector for free
    column j has a 1 at j and minus the pivot-row coefficients at pivots.
    Returned shape: ncols x (#free).
    """
    red, piv = rref(a, p)
    free = [c for c in range(ncols) if c not in piv]
    cols = []
    for j in free:
        v = [0] * ncols
        v[j] = 1
        for ri, pc in enumerate(piv):
            v[pc] = (-red[ri][j]) % p
        cols.append(v)
    return tuple(tuple(v[i] for v in cols) for i in range(ncols))
