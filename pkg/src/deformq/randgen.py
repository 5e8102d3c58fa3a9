"""Seeded random generators for property sweeps (tests and ``check`` suites)."""

from __future__ import annotations

import random
from fractions import Fraction

from .phasepoly import REAL, StarElem
from .scalars import CScalar, Series


def rand_rat(rng: random.Random, span: int = 5) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, 3))


def rand_cscalar(rng: random.Random, span: int = 5) -> CScalar:
    if rng.random() < 0.5:
        return CScalar(rand_rat(rng, span))
    return CScalar(rand_rat(rng, span), rand_rat(rng, span))


def rand_exps(rng: random.Random, nvars: int, max_deg: int) -> tuple:
    d = rng.randint(0, max_deg)
    e = [0] * nvars
    for _ in range(d):
        e[rng.randrange(nvars)] += 1
    return tuple(e)


def rand_elem(rng: random.Random, dim: int, N: int, max_deg: int = 4, terms: int = 4,
              chart: str = REAL, lam_terms: bool = True, real: bool = False) -> StarElem:
    out = {}
    for _ in range(rng.randint(1, terms)):
        k = rng.randint(0, 1) if lam_terms else 0
        c = CScalar(rand_rat(rng)) if real else rand_cscalar(rng)
        out[(rand_exps(rng, 2 * dim, max_deg), k)] = c
    return StarElem(dim, N, out, chart)


def rand_series(rng: random.Random, N: int, density: float = 0.5) -> Series:
    return Series([rand_cscalar(rng) if rng.random() < density else CScalar(0) for _ in range(N + 1)], N)


def _matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def rand_symplectic(rng: random.Random, n: int, factors: int = 3) -> list:
    """Product of random shears and block-diagonal maps; symplectic over Q by construction."""
    m = 2 * n
    M = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
    for _ in range(factors):
        kind = rng.randrange(3)
        G = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
        if kind < 2:
            # [[1, S], [0, 1]] or [[1, 0], [S, 1]] with S symmetric
            for a in range(n):
                for b in range(a, n):
                    s = rand_rat(rng, 3)
                    if kind == 0:
                        G[a][n + b] = G[b][n + a] = s
                    else:
                        G[n + a][b] = G[n + b][a] = s
        else:
            # diag(A, A^-T) with A unit lower triangular times a diagonal
            d = [Fraction(rng.choice([1, 2, 3]), rng.choice([1, 2])) * rng.choice([1, -1]) for _ in range(n)]
            A = [[Fraction(0)] * n for _ in range(n)]
            for a in range(n):
                A[a][a] = d[a]
                for b in range(a):
                    A[a][b] = rand_rat(rng, 2)
            Ainv = _lower_inverse(A)
            for a in range(n):
                for b in range(n):
                    G[a][b] = A[a][b]
                    G[n + a][n + b] = Ainv[b][a]
        M = _matmul(G, M)
    return M


def _lower_inverse(A):
    n = len(A)
    X = [[Fraction(0)] * n for _ in range(n)]
    for col in range(n):
        for i in range(n):
            s = Fraction(int(i == col)) - sum(A[i][k] * X[k][col] for k in range(i))
            X[i][col] = s / A[i][i]
    return X


def rand_fiber(rng: random.Random, n: int, terms: int = 4, max_x: int = 2, max_y: int = 3, max_lam: int = 2):
    """Random element of the formal Weyl algebra bundle with forms."""
    from .fedosov import FiberElem

    out = FiberElem.zero(n)
    m = 2 * n
    for _ in range(rng.randint(1, terms)):
        form = tuple(sorted(rng.sample(range(m), rng.randint(0, m))))
        out = out + FiberElem.monomial(n, rand_exps(rng, m, max_x), rand_exps(rng, m, max_y), form,
                                       rng.randint(0, max_lam), rand_cscalar(rng))
    return out
