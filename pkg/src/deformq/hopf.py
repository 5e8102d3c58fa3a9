"""Finite-basis Hopf-*-algebras, Sweedler sums and convolution groups.

A :class:`HopfAlgebra` is a :class:`FiniteAlgebra` with sparse coproduct
triples ``comult[i] = [(j, k, c), ...]`` meaning ``Delta(e_i) = sum c e_j (x) e_k``,
a counit vector and an antipode given row by row.

Convolution maps ``H -> A`` are lists of ``A``-elements indexed by the basis
of ``H``.  Actions are duck-typed: anything with ``act(h, a)`` for ``h`` a
Hopf element and ``a`` an element of the target algebra (see
:mod:`deformq.actions`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from . import linalg
from .algebra import AlgElem, DegreeOverflow, FiniteAlgebra
from .lie import PBW, LieAlgebra, at_lambda_one
from .scalars import ONE, ZERO, CScalar, cs


class NotAGroup(ValueError):
    pass


class NotInGL(ValueError):
    pass


class HopfAlgebra(FiniteAlgebra):
    def __init__(self, labels, mult, unit, comult, counit, antipode, star_table=None,
                 partial: bool = False, name: str = ""):
        super().__init__(labels, mult, unit, star_table, partial, name)
        self.comult = [[(j, k, cs(c)) for j, k, c in row if c] for row in comult]
        self.counit_vec = [cs(c) for c in counit]
        self.antipode_rows = [{j: cs(c) for j, c in row.items() if c} for row in antipode]
        S = tuple(tuple(self.antipode_rows[i].get(j, ZERO) for i in range(self.dim)) for j in range(self.dim))
        self._S_matrix = S
        try:
            self._S_inv = linalg.inverse(S)
        except linalg.SingularMatrix:
            self._S_inv = None

    # structure maps on elements
    def coproduct(self, x: AlgElem) -> dict:
        out: dict = {}
        for i, a in x.vec.items():
            for j, k, c in self.comult[i]:
                key = (j, k)
                v = out.get(key, ZERO) + a * c
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return out

    def counit(self, x: AlgElem) -> CScalar:
        acc = ZERO
        for i, a in x.vec.items():
            acc = acc + a * self.counit_vec[i]
        return acc

    def antipode(self, x: AlgElem) -> AlgElem:
        out: dict = {}
        for i, a in x.vec.items():
            for j, c in self.antipode_rows[i].items():
                out[j] = out.get(j, ZERO) + a * c
        return AlgElem(self, out)

    def antipode_inv(self, x: AlgElem) -> AlgElem:
        if self._S_inv is None:
            raise ZeroDivisionError("antipode is not invertible")
        return self.from_vector(linalg.matvec(self._S_inv, x.dense()))

    def sweedler(self, x: AlgElem) -> list:
        """``Delta(x)`` as a list of ``(x_(1), x_(2))`` pairs."""
        return [(self.e(j).scale(c), self.e(k)) for (j, k), c in sorted(self.coproduct(x).items())]

    # tensor helpers
    def tensor_mul(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for (i, j), a in x.items():
            for (k, l), b in y.items():
                ab = a * b
                for p, c in self.mul_basis(i, k).items():
                    for r, d in self.mul_basis(j, l).items():
                        out[(p, r)] = out.get((p, r), ZERO) + ab * c * d
        return {k: v for k, v in out.items() if v}

    def is_cocommutative(self) -> bool:
        for x in self.basis():
            d = self.coproduct(x)
            if d != {(k, j): c for (j, k), c in d.items()}:
                return False
        return True

    def antipode_involutive(self) -> bool:
        return all(self.antipode(self.antipode(x)) == x for x in self.basis())

    def verify(self) -> list:
        """Every Hopf-*-algebra axiom, basis-exhaustively."""
        bad = super().verify()
        B = self.basis()
        one = self.one()
        for x in B:
            d = self.coproduct(x)
            # coassociativity
            left: dict = {}
            right: dict = {}
            for (j, k), c in d.items():
                for (a, b), c2 in self.coproduct(self.e(j)).items():
                    left[(a, b, k)] = left.get((a, b, k), ZERO) + c * c2
                for (a, b), c2 in self.coproduct(self.e(k)).items():
                    right[(j, a, b)] = right.get((j, a, b), ZERO) + c * c2
            if {k: v for k, v in left.items() if v} != {k: v for k, v in right.items() if v}:
                bad.append(("coassociativity", x))
            # counit laws
            l_eps = AlgElem(self, {})
            r_eps = AlgElem(self, {})
            for (j, k), c in d.items():
                l_eps = l_eps + self.e(k).scale(c * self.counit_vec[j])
                r_eps = r_eps + self.e(j).scale(c * self.counit_vec[k])
            if l_eps != x or r_eps != x:
                bad.append(("counit", x))
            # antipode
            try:
                s1 = self.zero()
                s2 = self.zero()
                for (j, k), c in d.items():
                    s1 = s1 + self.mul(self.antipode(self.e(j)), self.e(k)).scale(c)
                    s2 = s2 + self.mul(self.e(j), self.antipode(self.e(k))).scale(c)
                target = one.scale(self.counit(x))
                if s1 != target or s2 != target:
                    bad.append(("antipode", x))
            except DegreeOverflow:
                pass
        if self.coproduct(one) != {(i, j): a * b for i, a in one.vec.items() for j, b in one.vec.items()}:
            bad.append(("coproduct unital", one))
        if self.counit(one) != ONE:
            bad.append(("counit unital", one))
        for x in B:
            for y in B:
                try:
                    xy = self.mul(x, y)
                except DegreeOverflow:
                    continue
                if self.coproduct(xy) != self.tensor_mul(self.coproduct(x), self.coproduct(y)):
                    bad.append(("coproduct multiplicative", x, y))
                if self.counit(xy) != self.counit(x) * self.counit(y):
                    bad.append(("counit multiplicative", x, y))
                try:
                    if self.antipode(xy) != self.mul(self.antipode(y), self.antipode(x)):
                        bad.append(("antipode antimultiplicative", x, y))
                except DegreeOverflow:
                    pass
        if self.star_table is not None:
            for x in B:
                xs = self.star(x)
                dstar = {}
                for (j, k), c in self.coproduct(x).items():
                    for a, ca in self.star(self.e(j)).vec.items():
                        for b, cb in self.star(self.e(k)).vec.items():
                            dstar[(a, b)] = dstar.get((a, b), ZERO) + c.conj() * ca * cb
                if self.coproduct(xs) != {k: v for k, v in dstar.items() if v}:
                    bad.append(("star comultiplicative", x))
                if self.counit(xs) != self.counit(x).conj():
                    bad.append(("star counit", x))
                if self.antipode(self.star(self.antipode(xs))) != x:
                    bad.append(("S(S(x*)*) = x", x))
        return bad


# group tables

def cyclic_group(m: int):
    cayley = [[(i + j) % m for j in range(m)] for i in range(m)]
    inverse = [(-i) % m for i in range(m)]
    return cayley, inverse


def symmetric_group3():
    from itertools import permutations

    perms = list(permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    cayley = [[index[tuple(a[b[k]] for k in range(3))] for b in perms] for a in perms]
    inverse = []
    for p in perms:
        inv = [0] * 3
        for k, v in enumerate(p):
            inv[v] = k
        inverse.append(index[tuple(inv)])
    return cayley, inverse


def check_group(cayley, inverse) -> int:
    """Validate a Cayley table; returns the index of the identity."""
    m = len(cayley)
    if any(len(r) != m or sorted(r) != list(range(m)) for r in cayley):
        raise NotAGroup("Cayley table is not a Latin square")
    ids = [e for e in range(m) if all(cayley[e][g] == g == cayley[g][e] for g in range(m))]
    if not ids:
        raise NotAGroup("no identity element")
    e = ids[0]
    for a, b, c in product(range(m), repeat=3):
        if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]]:
            raise NotAGroup(f"not associative at {(a, b, c)}")
    for g in range(m):
        if cayley[g][inverse[g]] != e or cayley[inverse[g]][g] != e:
            raise NotAGroup(f"bad inverse for element {g}")
    return e


def group_algebra(cayley, inverse, labels=None) -> HopfAlgebra:
    """``C[G]``: ``Delta g = g (x) g``, ``S g = g^-1``, ``g* = g^-1``."""
    e = check_group(cayley, inverse)
    m = len(cayley)
    labels = labels or [f"g{i}" for i in range(m)]
    mult = {(i, j): {cayley[i][j]: 1} for i in range(m) for j in range(m)}
    return HopfAlgebra(
        labels, mult, {e: 1},
        comult=[[(i, i, 1)] for i in range(m)],
        counit=[1] * m,
        antipode=[{inverse[i]: 1} for i in range(m)],
        star_table=[{inverse[i]: 1} for i in range(m)],
        name="C[G]",
    )


def function_algebra(cayley, inverse, labels=None) -> HopfAlgebra:
    """``F(G)`` on delta functions: ``Delta d_g = sum_{ab=g} d_a (x) d_b``."""
    e = check_group(cayley, inverse)
    m = len(cayley)
    labels = labels or [f"d{i}" for i in range(m)]
    mult = {(i, j): ({i: 1} if i == j else {}) for i in range(m) for j in range(m)}
    comult = [[(a, b, 1) for a in range(m) for b in range(m) if cayley[a][b] == g] for g in range(m)]
    return HopfAlgebra(
        labels, mult, {i: 1 for i in range(m)},
        comult=comult,
        counit=[1 if g == e else 0 for g in range(m)],
        antipode=[{inverse[g]: 1} for g in range(m)],
        star_table=[{g: 1} for g in range(m)],
        name="F(G)",
    )


def pbw_basis(dim: int, D: int) -> list:
    """Ordered monomials (nondecreasing index tuples) of degree <= D."""
    from itertools import combinations_with_replacement

    out = []
    for d in range(D + 1):
        out.extend(combinations_with_replacement(range(dim), d))
    return out


def truncated_enveloping(lie: LieAlgebra, D: int) -> HopfAlgebra:
    """U(g) on PBW monomials of degree <= D; products past D are undefined."""
    basis = pbw_basis(lie.dim, D)
    index = {m: i for i, m in enumerate(basis)}
    pbw = PBW(lie, D)
    mult = {}
    for i, m1 in enumerate(basis):
        for j, m2 in enumerate(basis):
            if len(m1) + len(m2) > D:
                continue
            prod = at_lambda_one(pbw.mul({(m1, 0): ONE}, {(m2, 0): ONE}))
            mult[(i, j)] = {index[m]: c for m, c in prod.items()}
    comult = []
    for m in basis:
        # Delta of a product of primitives: split into complementary subwords
        terms: dict = {}
        k = len(m)
        for mask in range(1 << k):
            left = tuple(m[t] for t in range(k) if mask >> t & 1)
            right = tuple(m[t] for t in range(k) if not mask >> t & 1)
            key = (index[left], index[right])
            terms[key] = terms.get(key, 0) + 1
        comult.append([(a, b, c) for (a, b), c in terms.items()])
    counit = [1 if not m else 0 for m in basis]
    antipode = []
    for m in basis:
        rev = at_lambda_one(pbw.reduce(tuple(reversed(m))))
        sign = -1 if len(m) % 2 else 1
        antipode.append({index[w]: c * sign for w, c in rev.items()})
    labels = ["1" if not m else "*".join(f"e{i + 1}" for i in m) for m in basis]
    # xi* = -xi extended antilinearly and antimultiplicatively: equals S on real basis
    return HopfAlgebra(labels, mult, {0: 1}, comult, counit, antipode,
                       star_table=[dict(r) for r in antipode], partial=True,
                       name=f"U({lie.name or 'g'})<={D}")


def _qint_binomial(n: int, k: int, q: Fraction) -> Fraction:
    def qint(j):
        return sum(q ** t for t in range(j))

    def qfact(j):
        out = Fraction(1)
        for t in range(1, j + 1):
            out *= qint(t)
        return out

    return qfact(n) / (qfact(k) * qfact(n - k))


def q_deformed(q=2, D: int = 3) -> HopfAlgebra:
    """Basis ``g^a X^b`` with ``X g = q g X``, ``Delta X = X (x) 1 + g (x) X``,
    ``S X = -g^-1 X``; truncated by ``max(|a|, |a+b|) + b <= D``.
    """
    q = Fraction(q)

    def deg(a, b):
        return max(abs(a), abs(a + b)) + b

    basis = [(a, b) for b in range(D + 1) for a in range(-D, D + 1) if deg(a, b) <= D]
    index = {m: i for i, m in enumerate(basis)}
    mult = {}
    for i, (a, b) in enumerate(basis):
        for j, (c, d) in enumerate(basis):
            key = (a + c, b + d)
            if key in index:
                mult[(i, j)] = {index[key]: q ** (b * c)}
    unit = {index[(0, 0)]: 1}
    comult = []
    for a, b in basis:
        # (A + B)^b with A = X(x)1, B = g(x)X and A B = q B A
        row = []
        for k in range(b + 1):
            row.append((index[(a + k, b - k)], index[(a, k)], _qint_binomial(b, k, q)))
        comult.append(row)
    counit = [1 if b == 0 else 0 for a, b in basis]
    antipode = []
    for a, b in basis:
        # S(g^a X^b) = (-g^-1 X)^b g^-a ; (g^-1 X)^b = q^{-b(b-1)/2} g^-b X^b
        coeff = Fraction(-1) ** b * q ** (-(b * (b - 1) // 2)) * q ** (-a * b)
        antipode.append({index[(-a - b, b)]: coeff})
    labels = [f"g^{a}X^{b}" for a, b in basis]
    return HopfAlgebra(labels, mult, unit, comult, counit, antipode, None, partial=True,
                       name=f"q-deformed(q={q})")


# convolution

@dataclass
class ConvMap:
    """Linear map ``H -> A`` given on the basis of ``H``."""

    H: HopfAlgebra
    A: object
    values: list

    def __call__(self, h: AlgElem):
        out = self.A.zero()
        for i, c in h.vec.items():
            out = out + self.values[i].scale(c)
        return out

    def __eq__(self, other):
        return isinstance(other, ConvMap) and self.values == other.values


def conv_unit(H: HopfAlgebra, A) -> ConvMap:
    return ConvMap(H, A, [A.one().scale(H.counit_vec[i]) for i in range(H.dim)])


def convolution(a: ConvMap, b: ConvMap) -> ConvMap:
    """``(a * b)(h) = a(h_(1)) b(h_(2))``."""
    H, A = a.H, a.A
    vals = []
    for i in range(H.dim):
        acc = A.zero()
        for j, k, c in H.comult[i]:
            acc = acc + A.mul(a.values[j], b.values[k]).scale(c)
        vals.append(acc)
    return ConvMap(H, A, vals)


@dataclass
class GLReport:
    member: bool
    violations: list = field(default_factory=list)

    def __bool__(self):
        return self.member


def is_GL_element(a: ConvMap, action) -> GLReport:
    H, A = a.H, a.A
    bad = []
    if a(H.one()) != A.one():
        bad.append(("normalisation", None))
    for g in H.basis():
        for h in H.basis():
            try:
                gh = H.mul(g, h)
            except DegreeOverflow:
                continue
            rhs = A.zero()
            for g1, g2 in H.sweedler(g):
                rhs = rhs + A.mul(a(g1), action.act(g2, a(h)))
            if a(gh) != rhs:
                bad.append(("action condition", g, h))
    for h in H.basis():
        for b in A.basis():
            lhs = A.zero()
            rhs = A.zero()
            for h1, h2 in H.sweedler(h):
                lhs = lhs + A.mul(action.act(h1, b), a(h2))
                rhs = rhs + A.mul(a(h1), action.act(h2, b))
            if lhs != rhs:
                bad.append(("module condition", h, b))
    return GLReport(not bad, bad)


def is_U_element(a: ConvMap, action) -> GLReport:
    rep = is_GL_element(a, action)
    H, A = a.H, a.A
    bad = list(rep.violations)
    for h in H.basis():
        acc = A.zero()
        for h1, h2 in H.sweedler(h):
            inner = a(H.star(H.antipode(h2)))
            acc = acc + A.mul(a(h1), A.star(inner))
        if acc != A.one().scale(H.counit(h)):
            bad.append(("unitarity", h))
    return GLReport(not bad, bad)


def conv_inverse(a: ConvMap, action, check: bool = True) -> ConvMap:
    """``a^-1(h) = h_(2) > a(S^-1(h_(1)))``."""
    if check:
        rep = is_GL_element(a, action)
        if not rep:
            raise NotInGL(f"map violates {rep.violations[0][0]}")
    H, A = a.H, a.A
    vals = []
    for i in range(H.dim):
        acc = A.zero()
        for j, k, c in H.comult[i]:
            acc = acc + action.act(H.e(k), a(H.antipode_inv(H.e(j)))).scale(c)
        vals.append(acc)
    return ConvMap(H, A, vals)


def hat_map(c, H: HopfAlgebra, action) -> ConvMap:
    """``c^(h) = c (h > c^-1)`` for central invertible ``c``."""
    A = action.A
    if not A.is_central(c):
        raise ValueError("c is not central")
    cinv = A.inverse(c)
    return ConvMap(H, A, [A.mul(c, action.act(h, cinv)) for h in H.basis()])


def is_invariant(c, H: HopfAlgebra, action) -> bool:
    """``h > c = eps(h) c`` for all basis ``h``."""
    return all(action.act(h, c) == c.scale(H.counit(h)) for h in H.basis())


def char_automorphism(chi: ConvMap):
    """``Phi(h) = chi(S(h_(1))) h_(2)`` as a map on Hopf elements.

    ``chi`` takes values in the scalar algebra; its single coefficient is used.
    """
    H = chi.H

    def phi(h: AlgElem) -> AlgElem:
        out = H.zero()
        for h1, h2 in H.sweedler(h):
            out = out + h2.scale(chi(H.antipode(h1)).coeff(0))
        return out

    return phi


def characters_of(H: HopfAlgebra, C, candidates: Sequence[Sequence]) -> list:
    """Filter value tuples that define algebra maps ``H -> C`` (``C`` one-dimensional)."""
    out = []
    for vals in candidates:
        chi = ConvMap(H, C, [C.one().scale(v) for v in vals])
        ok = chi(H.one()) == C.one()
        for x in H.basis():
            for y in H.basis():
                if chi(H.mul(x, y)) != C.mul(chi(x), chi(y)):
                    ok = False
        if ok:
            out.append(chi)
    return out
