"""Finite-basis *-algebras given by structure tables, plus a handle for the
(infinite-dimensional) star-product algebras.

Both kinds expose the same small protocol used by convolution groups and
crossed products: ``zero()``, ``one()``, ``mul(a, b)``, ``star(a)`` and a
finite ``basis()`` (for the star algebras: a sample basis chosen by the caller).
"""

from __future__ import annotations

from typing import Sequence

from . import linalg
from .scalars import ONE, ZERO, CScalar, cs


class DegreeOverflow(ArithmeticError):
    """Product leaves the truncated basis (only for filtered algebras)."""


def _vadd(x: dict, y: dict, c=ONE) -> dict:
    out = dict(x)
    for k, v in y.items():
        w = out.get(k, ZERO) + c * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


class AlgElem:
    """Sparse coefficient vector over a :class:`FiniteAlgebra` basis."""

    __slots__ = ("alg", "vec")

    def __init__(self, alg: "FiniteAlgebra", vec: dict):
        self.alg = alg
        self.vec = {k: v for k, v in vec.items() if v}

    def __add__(self, other):
        other = self.alg.coerce(other)
        return AlgElem(self.alg, _vadd(self.vec, other.vec))

    __radd__ = __add__

    def __neg__(self):
        return AlgElem(self.alg, {k: -v for k, v in self.vec.items()})

    def __sub__(self, other):
        other = self.alg.coerce(other)
        return AlgElem(self.alg, _vadd(self.vec, other.vec, CScalar(-1)))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "AlgElem":
        c = cs(c)
        return AlgElem(self.alg, {k: c * v for k, v in self.vec.items()})

    def __mul__(self, other):
        if isinstance(other, AlgElem):
            return self.alg.mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if isinstance(other, AlgElem):
            return self.alg is other.alg and self.vec == other.vec
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.vec.items()))

    def __bool__(self):
        return bool(self.vec)

    def coeff(self, i: int) -> CScalar:
        return self.vec.get(i, ZERO)

    def dense(self) -> tuple:
        return tuple(self.vec.get(i, ZERO) for i in range(self.alg.dim))

    def __repr__(self):
        if not self.vec:
            return "0"
        return " + ".join(f"({v})*{self.alg.labels[k]}" for k, v in sorted(self.vec.items()))


class FiniteAlgebra:
    """Associative unital algebra on a finite basis.

    ``mult[(i, j)]`` is the sparse product vector of basis elements ``i, j``;
    missing pairs raise :class:`DegreeOverflow` when ``partial`` is set.
    ``star_table[i]`` is ``e_i^*`` (extended antilinearly), or ``None``.
    """

    def __init__(self, labels: Sequence[str], mult: dict, unit: dict, star_table=None,
                 partial: bool = False, name: str = ""):
        self.labels = list(labels)
        self.dim = len(self.labels)
        self.mult = {k: {i: cs(c) for i, c in v.items() if c} for k, v in mult.items()}
        self.unit = {i: cs(c) for i, c in unit.items() if c}
        self.star_table = None
        if star_table is not None:
            self.star_table = [{i: cs(c) for i, c in v.items() if c} for v in star_table]
        self.partial = partial
        self.name = name
        if not partial:
            missing = [(i, j) for i in range(self.dim) for j in range(self.dim) if (i, j) not in self.mult]
            if missing:
                raise ValueError(f"multiplication table incomplete, first gap {missing[0]}")

    # protocol
    def basis(self) -> list:
        return [self.e(i) for i in range(self.dim)]

    def e(self, i) -> AlgElem:
        if isinstance(i, str):
            i = self.labels.index(i)
        return AlgElem(self, {i: ONE})

    def zero(self) -> AlgElem:
        return AlgElem(self, {})

    def one(self) -> AlgElem:
        return AlgElem(self, dict(self.unit))

    def coerce(self, x) -> AlgElem:
        if isinstance(x, AlgElem):
            if x.alg is not self:
                raise ValueError("elements of different algebras")
            return x
        return self.one().scale(x)

    def from_vector(self, v) -> AlgElem:
        return AlgElem(self, {i: cs(c) for i, c in enumerate(v)})

    def mul_basis(self, i: int, j: int) -> dict:
        try:
            return self.mult[(i, j)]
        except KeyError:
            raise DegreeOverflow(f"{self.labels[i]} * {self.labels[j]} leaves the truncated basis") from None

    def mul(self, x: AlgElem, y: AlgElem) -> AlgElem:
        out: dict = {}
        for i, a in x.vec.items():
            for j, b in y.vec.items():
                ab = a * b
                for k, c in self.mul_basis(i, j).items():
                    out[k] = out.get(k, ZERO) + ab * c
        return AlgElem(self, out)

    def star(self, x: AlgElem) -> AlgElem:
        if self.star_table is None:
            raise ValueError(f"{self.name or 'algebra'} has no *-involution")
        out: dict = {}
        for i, a in x.vec.items():
            ac = a.conj()
            for k, c in self.star_table[i].items():
                out[k] = out.get(k, ZERO) + ac * c
        return AlgElem(self, out)

    def is_commutative(self) -> bool:
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if (i, j) in self.mult and (j, i) in self.mult and self.mult[(i, j)] != self.mult[(j, i)]:
                    return False
        return True

    def is_central(self, x: AlgElem) -> bool:
        return all(self.mul(x, b) == self.mul(b, x) for b in self.basis())

    def left_matrix(self, x: AlgElem):
        """Matrix of ``y -> x y`` (columns are images of basis vectors)."""
        cols = [self.mul(x, b).dense() for b in self.basis()]
        return linalg.transpose(tuple(cols))

    def inverse(self, x: AlgElem) -> AlgElem:
        """Two-sided inverse by solving ``x y = 1``; raises if singular."""
        L = self.left_matrix(x)
        try:
            Linv = linalg.inverse(L)
        except linalg.SingularMatrix:
            raise ZeroDivisionError("element is not invertible") from None
        y = self.from_vector(linalg.matvec(Linv, self.one().dense()))
        if self.mul(y, x) != self.one():
            raise ZeroDivisionError("element has only a one-sided inverse")
        return y

    def verify(self) -> list:
        """Basis-exhaustive algebra and *-axioms; returns violated instances."""
        bad = []
        B = self.basis()
        one = self.one()
        for x in B:
            if self.mul(one, x) != x or self.mul(x, one) != x:
                bad.append(("unit", x))
        for x in B:
            for y in B:
                for z in B:
                    try:
                        lhs = self.mul(self.mul(x, y), z)
                        rhs = self.mul(x, self.mul(y, z))
                    except DegreeOverflow:
                        continue
                    if lhs != rhs:
                        bad.append(("associativity", x, y, z))
        if self.star_table is not None:
            for x in B:
                if self.star(self.star(x)) != x:
                    bad.append(("star involution", x))
                for y in B:
                    try:
                        lhs = self.star(self.mul(x, y))
                    except DegreeOverflow:
                        continue
                    if lhs != self.mul(self.star(y), self.star(x)):
                        bad.append(("star antimultiplicative", x, y))
        return bad


def scalar_algebra() -> FiniteAlgebra:
    """The ground field Q(i) as a one-dimensional *-algebra."""
    return FiniteAlgebra(["1"], {(0, 0): {0: 1}}, {0: 1}, [{0: 1}], name="C")


def matrix_algebra(n: int) -> FiniteAlgebra:
    """``M_n(Q(i))`` on matrix units ``E_ab`` (index ``a*n + b``)."""
    labels = [f"E{a + 1}{b + 1}" for a in range(n) for b in range(n)]
    mult = {}
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    mult[(a * n + b, c * n + d)] = {a * n + d: 1} if b == c else {}
    unit = {a * n + a: 1 for a in range(n)}
    star = [{b * n + a: 1} for a in range(n) for b in range(n)]
    return FiniteAlgebra(labels, mult, unit, star, name=f"M{n}")


def matrix_elem(alg: FiniteAlgebra, rows) -> AlgElem:
    n = len(rows)
    return AlgElem(alg, {a * n + b: cs(rows[a][b]) for a in range(n) for b in range(n)})


def function_values_algebra(points: Sequence[str]) -> FiniteAlgebra:
    """Pointwise algebra of functions on a finite set, basis of deltas."""
    m = len(points)
    mult = {(i, j): ({i: 1} if i == j else {}) for i in range(m) for j in range(m)}
    return FiniteAlgebra([f"d_{p}" for p in points], mult, {i: 1 for i in range(m)},
                         [{i: 1} for i in range(m)], name="F")


class StarAlgebra:
    """Handle making ``(Pol[[lam]], *)`` usable where a *-algebra is expected.

    ``sample`` is the finite list of elements used for basis-exhaustive checks;
    the star is complex conjugation, which is an involution for Hermitian
    products (Weyl, every tkappa).
    """

    def __init__(self, spec, N: int, sample: Sequence = ()):
        from .phasepoly import StarElem
        from .starproducts import star

        self.spec = spec
        self.N = N
        self._star = star
        self._cls = StarElem
        self.sample = list(sample)

    def basis(self):
        return list(self.sample)

    def zero(self):
        return self._cls.zero(self.spec.dim, self.N, self.spec.chart)

    def one(self):
        return self._cls.const(1, self.spec.dim, self.N, self.spec.chart)

    def mul(self, a, b):
        return self._star(self.spec, a, b)

    def star(self, a):
        return a.conj()

    def coerce(self, x):
        if isinstance(x, self._cls):
            return x
        return self.one().scale(x)
