"""Lie algebras by structure constants and PBW normal ordering in U_lam(g).

``U_lam(g)`` is the tensor algebra modulo ``x y - y x - lam [x, y]``.  Ordered
monomials are nondecreasing tuples of generator indices; an element is a dict
``(monomial, lam_power) -> CScalar``.  Setting ``lam = 1`` gives U(g).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .scalars import ZERO, CScalar, as_rat, cs


class LieAlgebra:
    """Structure constants ``[e_i, e_j] = sum_k c[i][j][k] e_k`` over Q."""

    def __init__(self, dim: int, brackets: dict, name: str = ""):
        self.dim = dim
        self.name = name
        c = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), vec in brackets.items():
            for k, v in vec.items():
                v = as_rat(v)
                c[i][j][k] += v
                c[j][i][k] -= v
        self.c = c
        problems = self.check()
        if problems:
            raise ValueError(f"not a Lie algebra: {problems[0]}")

    @classmethod
    def from_table(cls, dim: int, table: Sequence, name: str = "") -> "LieAlgebra":
        """``table`` lists ``(i, j, k, value)`` with ``[e_i, e_j] ∋ value e_k`` for ``i < j``."""
        brackets: dict = {}
        for i, j, k, v in table:
            brackets.setdefault((i, j), {})[k] = v
        return cls(dim, brackets, name)

    def check(self) -> list:
        d, c = self.dim, self.c
        bad = []
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    if c[i][j][k] != -c[j][i][k]:
                        bad.append(("antisymmetry", i, j, k))
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    for m in range(d):
                        s = sum(c[j][k][l] * c[i][l][m] + c[k][i][l] * c[j][l][m] + c[i][j][l] * c[k][l][m]
                                for l in range(d))
                        if s:
                            bad.append(("jacobi", i, j, k, m))
        return bad

    def bracket(self, i: int, j: int) -> dict:
        return {k: v for k, v in enumerate(self.c[i][j]) if v}

    def is_abelian(self) -> bool:
        return all(not v for row in self.c for col in row for v in col)


def heisenberg() -> LieAlgebra:
    """``[e1, e2] = e3`` (0-based: ``[0, 1] = 2``)."""
    return LieAlgebra.from_table(3, [(0, 1, 2, 1)], "heisenberg")


def solvable3() -> LieAlgebra:
    """``[e1, e2] = e2``, ``[e1, e3] = 2 e3``: a 3-dimensional solvable algebra."""
    return LieAlgebra.from_table(3, [(0, 1, 1, 1), (0, 2, 2, 2)], "solvable3")


def sl2() -> LieAlgebra:
    """``[h, e] = 2e``, ``[h, f] = -2f``, ``[e, f] = h`` with basis (h, e, f)."""
    return LieAlgebra.from_table(3, [(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)], "sl2")


def abelian(dim: int) -> LieAlgebra:
    return LieAlgebra(dim, {}, "abelian")


def _add(out: dict, key, c):
    v = out.get(key)
    v = c if v is None else v + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


class PBW:
    """Normal ordering in ``U_lam(g)``, truncated at ``lam^N``."""

    def __init__(self, lie: LieAlgebra, N: int):
        self.lie = lie
        self.N = N
        self._cache: dict = {}

    def times_generator(self, mono: tuple, j: int) -> dict:
        """Normal form of ``e^mono * e_j``."""
        key = (mono, j)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if not mono or mono[-1] <= j:
            res = {(mono + (j,), 0): CScalar(1)}
        else:
            i = mono[-1]
            head = mono[:-1]
            res: dict = {}
            # head e_i e_j = head e_j e_i + lam sum_k c_ij^k head e_k
            for (m, k), c in self.times_generator(head, j).items():
                for (m2, k2), c2 in self.times_generator(m, i).items():
                    _add(res, (m2, k + k2), c * c2)
            if self.N >= 1:
                for gen, v in self.lie.bracket(i, j).items():
                    for (m, k), c in self.times_generator(head, gen).items():
                        if k + 1 <= self.N:
                            _add(res, (m, k + 1), c * v)
        res = {key2: v for key2, v in res.items() if key2[1] <= self.N}
        self._cache[key] = res
        return res

    def mul(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for (m1, k1), c1 in x.items():
            for (m2, k2), c2 in y.items():
                if k1 + k2 > self.N:
                    continue
                cur = {(m1, k1 + k2): c1 * c2}
                for j in m2:
                    nxt: dict = {}
                    for (m, k), c in cur.items():
                        for (m3, k3), c3 in self.times_generator(m, j).items():
                            if k + k3 <= self.N:
                                _add(nxt, (m3, k + k3), c * c3)
                    cur = nxt
                for key, c in cur.items():
                    _add(out, key, c)
        return out

    def reduce(self, word: Sequence[int]) -> dict:
        out = {((), 0): CScalar(1)}
        for j in word:
            out = self.mul(out, {((j,), 0): CScalar(1)})
        return out


def pbw_reduce(lie: LieAlgebra, word: Sequence[int], N: int = 6) -> dict:
    return PBW(lie, N).reduce(word)


def at_lambda_one(x: dict) -> dict:
    """Evaluate ``lam = 1``: drop the λ-grading."""
    out: dict = {}
    for (m, _), c in x.items():
        _add(out, m, c)
    return out


def mono_from_exps(exps: Sequence[int]) -> tuple:
    out = []
    for i, e in enumerate(exps):
        out.extend([i] * e)
    return tuple(out)


def exps_from_mono(mono: tuple, dim: int) -> tuple:
    e = [0] * dim
    for i in mono:
        e[i] += 1
    return tuple(e)
