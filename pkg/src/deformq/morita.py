"""Inner-product spaces over Q(i), rank-one operators, induced inner products,
full idempotents and the deformed projector.

Inner products are antilinear in the first slot: ``<phi, psi> = phi^* G psi``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import linalg
from .phasepoly import REAL, StarElem
from .scalars import ONE, ZERO, CScalar, binomial_coefficient, cs
from .starproducts import StarSpec, star


class NotPositive(ValueError):
    """Gram matrix is not positive semidefinite."""


class NotIdempotent(ValueError):
    pass


def _vec(v) -> tuple:
    return tuple(cs(x) for x in v)


class InnerProdSpace:
    def __init__(self, gram):
        g = linalg.mat(gram)
        if not linalg.is_hermitian(g):
            raise ValueError("gram matrix must be conjugate-symmetric")
        self.gram = g
        self.dim = len(g)

    @classmethod
    def standard(cls, k: int) -> "InnerProdSpace":
        return cls(linalg.identity(k))

    def inner(self, phi, psi) -> CScalar:
        phi, psi = _vec(phi), _vec(psi)
        gpsi = linalg.matvec(self.gram, psi)
        return sum((a.conj() * b for a, b in zip(phi, gpsi)), ZERO)

    def is_positive(self) -> bool:
        return linalg.is_psd(self.gram)


def cauchy_schwarz_gap(space: InnerProdSpace, phi, psi) -> Fraction:
    """``<phi,phi><psi,psi> - <phi,psi><psi,phi>``, a non-negative rational."""
    if not space.is_positive():
        raise NotPositive("Cauchy-Schwarz needs a positive semidefinite gram")
    gap = space.inner(phi, phi) * space.inner(psi, psi) - space.inner(phi, psi) * space.inner(psi, phi)
    assert gap.is_real()
    return gap.re


def adjoint(A, source: InnerProdSpace, target: InnerProdSpace):
    """``A^* = G_s^-1 A^dagger G_t`` for ``A: source -> target``."""
    A = linalg.mat(A)
    ginv = linalg.inverse(source.gram)
    return linalg.matmul(ginv, linalg.matmul(linalg.conj_transpose(A), target.gram))


@dataclass(frozen=True)
class RankOneOp:
    """``chi -> phi <psi, chi>``."""

    phi: tuple
    psi: tuple
    space: InnerProdSpace

    def __call__(self, chi) -> tuple:
        s = self.space.inner(self.psi, chi)
        return tuple(a * s for a in _vec(self.phi))

    def matrix(self):
        # phi (G^T psi-bar)^T, i.e. column phi times row psi^* G
        row = linalg.matvec(linalg.transpose(self.space.gram), tuple(x.conj() for x in _vec(self.psi)))
        return tuple(tuple(a * b for b in row) for a in _vec(self.phi))

    def compose(self, other: "RankOneOp") -> "RankOneOp":
        """``Theta_{phi,psi} Theta_{phi',psi'} = Theta_{phi <psi,phi'>, psi'}``."""
        s = self.space.inner(self.psi, other.phi)
        return RankOneOp(tuple(a * s for a in _vec(self.phi)), _vec(other.psi), self.space)

    def adjoint(self) -> "RankOneOp":
        return RankOneOp(_vec(self.psi), _vec(self.phi), self.space)


def theta(phi, psi, space: InnerProdSpace) -> RankOneOp:
    return RankOneOp(_vec(phi), _vec(psi), space)


# matrices over an entry algebra

class MatrixStarAlg:
    """``M_n(A)`` with ``A`` either Q(i) (``spec=None``) or a star algebra."""

    def __init__(self, n: int, spec: StarSpec | None = None, N: int = 0):
        self.n = n
        self.spec = spec
        self.N = N

    def _entry(self, x):
        if self.spec is None:
            return cs(x)
        if isinstance(x, StarElem):
            return x
        return StarElem.const(x, self.spec.dim, self.N, self.spec.chart)

    def coerce(self, rows):
        return tuple(tuple(self._entry(x) for x in row) for row in rows)

    def _mul_entry(self, a, b):
        return a * b if self.spec is None else star(self.spec, a, b)

    def mul(self, a, b):
        n = self.n
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = self._entry(0)
                for k in range(n):
                    acc = acc + self._mul_entry(a[i][k], b[k][j])
                row.append(acc)
            out.append(tuple(row))
        return tuple(out)

    def add(self, a, b):
        return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))

    def sub(self, a, b):
        return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(a, b))

    def scale(self, c, a):
        c = cs(c)
        if self.spec is None:
            return tuple(tuple(c * x for x in r) for r in a)
        return tuple(tuple(x.scale(c) for x in r) for r in a)

    def one(self):
        return self.coerce([[1 if i == j else 0 for j in range(self.n)] for i in range(self.n)])

    def star(self, a):
        n = self.n
        return tuple(tuple(a[j][i].conj() for j in range(n)) for i in range(n))

    def lam_order(self, a):
        return min(x.lam_order() for r in a for x in r)


# induced inner product on E (x)_B F

class RowModule:
    """``E = M_{r x m}(Q(i))``: right ``M_m``-module with ``<x1, x2>_B = x1^dagger x2``."""

    def __init__(self, r: int, m: int):
        self.r, self.m = r, m

    def basis(self):
        out = []
        for i in range(self.r):
            for j in range(self.m):
                out.append(tuple(tuple(ONE if (a, b) == (i, j) else ZERO for b in range(self.m))
                                 for a in range(self.r)))
        return out

    def inner(self, x1, x2):
        return linalg.matmul(linalg.conj_transpose(x1), x2)


class ColumnModule:
    """``F = M_{m x s}(Q(i))``: left ``M_m``-module with ``A = M_s`` and ``<y1, y2>_A = y1^dagger y2``."""

    def __init__(self, m: int, s: int):
        self.m, self.s = m, s

    def basis(self):
        out = []
        for i in range(self.m):
            for j in range(self.s):
                out.append(tuple(tuple(ONE if (a, b) == (i, j) else ZERO for b in range(self.s))
                                 for a in range(self.m)))
        return out

    def act(self, b, y):
        return linalg.matmul(b, y)

    def inner(self, y1, y2):
        return linalg.matmul(linalg.conj_transpose(y1), y2)


def induced_inner_product(x1, y1, x2, y2, E: RowModule, F: ColumnModule):
    """``<x1 (x) y1, x2 (x) y2> = <y1, <x1, x2>_B . y2>_A``."""
    x1, x2, y1, y2 = (linalg.mat(t) for t in (x1, x2, y1, y2))
    if len(x1[0]) != F.m or len(y1) != E.m or (E.m != F.m):
        raise ValueError("dimension mismatch between the modules")
    return F.inner(y1, F.act(E.inner(x1, x2), y2))


def induced_gram(E: RowModule, F: ColumnModule):
    """A-valued gram matrix on the C-basis ``{e_i (x) f_j}`` of ``E (x)_C F``."""
    pairs = [(x, y) for x in E.basis() for y in F.basis()]
    return pairs, [[induced_inner_product(a[0], a[1], b[0], b[1], E, F) for b in pairs] for a in pairs]


def degenerate_subspace(E: RowModule, F: ColumnModule) -> list:
    """Basis (coefficients over the C-basis of ``E (x)_C F``) of the vectors
    ``v`` with ``<w, v> = 0`` for all ``w``.  The quotient is ``E (x)_B F``."""
    pairs, gram = induced_gram(E, F)
    size = len(pairs)
    s = F.s
    rows = []
    for I in range(size):
        for a in range(s):
            for b in range(s):
                rows.append(tuple(gram[I][J][a][b] for J in range(size)))
    return linalg.kernel(tuple(rows))


def is_completely_positive(inner: Callable, vectors: Sequence) -> bool:
    """Block gram ``(<x_i, x_j>)`` is positive semidefinite."""
    blocks = [[inner(a, b) for b in vectors] for a in vectors]
    k = len(blocks[0][0]) if blocks else 0
    big = []
    for i in range(len(vectors)):
        for r in range(k):
            row = []
            for j in range(len(vectors)):
                row.extend(blocks[i][j][r])
            big.append(tuple(row))
    return linalg.is_psd(tuple(big))


# full idempotents

def _unit(n, a, b):
    return tuple(tuple(ONE if (i, j) == (a, b) else ZERO for j in range(n)) for i in range(n))


def is_full_idempotent(P, n: int | None = None) -> bool:
    """``span{E_ab P E_cd} = M_n`` for an idempotent ``P``."""
    P = linalg.mat(P)
    n = len(P) if n is None else n
    if linalg.matmul(P, P) != P:
        raise NotIdempotent("P is not idempotent")
    vecs = []
    for a in range(n):
        for b in range(n):
            left = linalg.matmul(_unit(n, a, b), P)
            for c in range(n):
                for d in range(n):
                    m = linalg.matmul(left, _unit(n, c, d))
                    vecs.append(tuple(x for row in m for x in row))
    return linalg.rank(vecs) == n * n


# deformed projector

def deformed_projector(P0, spec: StarSpec, N: int):
    """``P = 1/2 + (P0 - 1/2) * (1 + x)^{-1/2}`` with ``x = 4(P0*P0 - P0)``.

    The inverse square root is the binomial series in ``x``, which terminates
    because ``x`` has λ-order at least 1.
    """
    alg = MatrixStarAlg(len(P0), spec, N)
    P0 = alg.coerce(P0)
    classical = alg.sub(alg.mul(P0, P0), P0)
    # classical idempotency: λ⁰ part of P0*P0 - P0 is the pointwise defect
    if any(x.lam_part(0) for r in classical for x in r):
        raise NotIdempotent("P0 is not pointwise idempotent")
    x = alg.scale(4, classical)
    one = alg.one()
    series = one
    power = one
    k = 1
    while k <= N:
        power = alg.mul(power, x)
        if all(not e for r in power for e in r):
            break
        series = alg.add(series, alg.scale(binomial_coefficient(Fraction(-1, 2), k), power))
        k += 1
    half = alg.scale(Fraction(1, 2), one)
    return alg.add(half, alg.mul(alg.sub(P0, half), series))


def projector_fixture(N: int):
    """``G E G^-1`` with ``E = [[q, q(1-q)], [1, 1-q]]`` and ``G = [[1, p], [0, 1]]``
    in one degree of freedom; pointwise idempotent but not Hermitian."""
    q = StarElem.var(0, 1, N)
    p = StarElem.var(1, 1, N)
    one = StarElem.const(1, 1, N)
    E = ((q, q * (one - q)), (one, one - q))
    G = ((one, p), (StarElem.zero(1, N), one))
    Ginv = ((one, -p), (StarElem.zero(1, N), one))

    def mm(a, b):
        return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(2)), StarElem.zero(1, N)) for j in range(2))
                     for i in range(2))

    return mm(mm(G, E), Ginv)
