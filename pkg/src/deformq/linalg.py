"""Small exact linear algebra over Q(i).

Matrices are tuples of row tuples of :class:`CScalar`.  Everything here is
plain Gaussian elimination; sizes in this package are tiny.
"""

from __future__ import annotations

from typing import Sequence

from .scalars import ONE, ZERO, CScalar, cs

Matrix = tuple


class SingularMatrix(ZeroDivisionError):
    pass


def mat(rows) -> Matrix:
    return tuple(tuple(cs(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def zeros(r: int, c: int) -> Matrix:
    return tuple(tuple(ZERO for _ in range(c)) for _ in range(r))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    out = []
    for row in a:
        new = []
        for col in cols:
            acc = ZERO
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            new.append(acc)
        out.append(tuple(new))
    return tuple(out)


def matvec(a: Matrix, v: Sequence[CScalar]) -> tuple:
    out = []
    for row in a:
        acc = ZERO
        for x, y in zip(row, v):
            acc = acc + x * y
        out.append(acc)
    return tuple(out)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def conj_transpose(a: Matrix) -> Matrix:
    return tuple(tuple(x.conj() for x in col) for col in zip(*a))


def madd(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def msub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(a, b))


def mscale(c, a: Matrix) -> Matrix:
    c = cs(c)
    return tuple(tuple(c * x for x in r) for r in a)


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    rows = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col]), None)
        if piv is None:
            raise SingularMatrix("matrix is singular")
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = rows[col][col].inverse()
        rows[col] = [x * inv for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return tuple(tuple(r[n:]) for r in rows)


def row_reduce(vectors: Sequence[Sequence[CScalar]]):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    rows = [list(v) for v in vectors]
    if not rows:
        return [], []
    width = len(rows[0])
    pivots = []
    r = 0
    for col in range(width):
        piv = next((k for k in range(r, len(rows)) if rows[k][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][col]:
                f = rows[k][col]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(vectors) -> int:
    return len(row_reduce(vectors)[1])


def kernel(a: Matrix) -> list:
    """Basis of {v : a v = 0}."""
    if not a:
        return []
    width = len(a[0])
    rows, pivots = row_reduce(a)
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * width
        v[f] = ONE
        for row, p in zip(rows, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def is_hermitian(a: Matrix) -> bool:
    return a == conj_transpose(a)


def is_psd(a: Matrix) -> bool:
    """Exact positive semidefiniteness test for a Hermitian matrix.

    Symmetric elimination (LDL*): a zero pivot forces its whole row to vanish.
    """
    if not is_hermitian(a):
        raise ValueError("PSD test needs a Hermitian matrix")
    m = [list(r) for r in a]
    n = len(m)
    for k in range(n):
        d = m[k][k]
        if d.re < 0:
            return False
        if not d:
            if any(m[k][j] for j in range(k + 1, n)):
                return False
            continue
        inv = d.inverse()
        for i in range(k + 1, n):
            if not m[i][k]:
                continue
            f = m[i][k] * inv
            for j in range(k + 1, n):
                m[i][j] = m[i][j] - f * m[k][j]
    return True
