"""Hopf module-algebra actions, crossed products ``A x| H`` and their
*-structure and inner products, momentum maps, and H-invariance of star
products.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Sequence

from . import linalg
from .algebra import AlgElem, DegreeOverflow, FiniteAlgebra, StarAlgebra
from .hopf import HopfAlgebra
from .phasepoly import LinearMap, apply_linear
from .scalars import ONE, ZERO, CScalar, cs
from .starproducts import StarSpec, star


@dataclass
class Report:
    ok: bool
    checked: int = 0
    violations: list = field(default_factory=list)

    def __bool__(self):
        return self.ok

    def first(self):
        return self.violations[0] if self.violations else None


class Action:
    """``h > a`` given on basis elements of ``H``; linear in ``h``."""

    def __init__(self, H: HopfAlgebra, A, act_basis: Callable, name: str = ""):
        self.H = H
        self.A = A
        self._act_basis = act_basis
        self.name = name

    def act(self, h: AlgElem, a):
        out = self.A.zero()
        for i, c in h.vec.items():
            out = out + self._act_basis(i, a).scale(c)
        return out


def trivial_action(H: HopfAlgebra, A) -> Action:
    return Action(H, A, lambda i, a: a.scale(H.counit_vec[i]), "trivial")


def table_action(H: HopfAlgebra, A: FiniteAlgebra, table: dict, name: str = "") -> Action:
    """``table[(i, j)]`` is ``e_i > b_j`` as a sparse vector over ``A``."""
    def act(i, a):
        out = A.zero()
        for j, c in a.vec.items():
            out = out + AlgElem(A, {k: cs(v) for k, v in table.get((i, j), {}).items()}).scale(c)
        return out

    return Action(H, A, act, name)


def adjoint_action(H: HopfAlgebra) -> Action:
    """``ad(g)(h) = g_(1) h S(g_(2))``."""
    def act(i, a):
        out = H.zero()
        for g1, g2 in H.sweedler(H.e(i)):
            out = out + H.mul(H.mul(g1, a), H.antipode(g2))
        return out

    return Action(H, H, act, "adjoint")


def translation_action(H: HopfAlgebra, F: FiniteAlgebra, cayley) -> Action:
    """``C[G]`` on ``F(G)`` by ``g > d_y = d_{gy}``."""
    m = len(cayley)
    table = {(g, y): {cayley[g][y]: 1} for g in range(m) for y in range(m)}
    return table_action(H, F, table, "translation")


def linear_group_action(H: HopfAlgebra, A: StarAlgebra, maps: Sequence[LinearMap]) -> Action:
    """``C[G]`` on phase-space polynomials; ``maps[i]`` represents group element ``i``."""
    return Action(H, A, lambda i, f: apply_linear(maps[i], f), "linear")


def verify_action(act: Action, sample=None) -> Report:
    """Module-algebra and *-action axioms, exhaustive over ``H`` and ``sample``."""
    H, A = act.H, act.A
    B = list(sample) if sample is not None else A.basis()
    bad = []
    n = 0
    one_A = A.one()
    for a in B:
        n += 1
        if act.act(H.one(), a) != a:
            bad.append(("unit acts trivially", None, a))
    for h in H.basis():
        n += 1
        if act.act(h, one_A) != one_A.scale(H.counit(h)):
            bad.append(("h > 1 = eps(h) 1", h, None))
        for a in B:
            for g in H.basis():
                try:
                    gh = H.mul(g, h)
                except DegreeOverflow:
                    continue
                n += 1
                if act.act(gh, a) != act.act(g, act.act(h, a)):
                    bad.append(("(gh) > a = g > (h > a)", (g, h), a))
            for b in B:
                n += 1
                rhs = A.zero()
                for h1, h2 in H.sweedler(h):
                    rhs = rhs + A.mul(act.act(h1, a), act.act(h2, b))
                if act.act(h, A.mul(a, b)) != rhs:
                    bad.append(("h > (ab) = (h1 > a)(h2 > b)", h, (a, b)))
            if H.star_table is not None:
                n += 1
                if A.star(act.act(h, a)) != act.act(H.star(H.antipode(h)), A.star(a)):
                    bad.append(("(h > a)* = S(h)* > a*", h, a))
    return Report(not bad, n, bad)


# momentum maps

class MomentumMap:
    def __init__(self, H: HopfAlgebra, A, values: Sequence):
        self.H = H
        self.A = A
        self.values = list(values)

    def __call__(self, h: AlgElem):
        out = self.A.zero()
        for i, c in h.vec.items():
            out = out + self.values[i].scale(c)
        return out

    def verify(self) -> Report:
        H, A = self.H, self.A
        bad = []
        if self(H.one()) != A.one():
            bad.append(("J(1) = 1",))
        for g in H.basis():
            if H.star_table is not None and self(H.star(g)) != A.star(self(g)):
                bad.append(("J(g*) = J(g)*", g))
            for h in H.basis():
                try:
                    gh = H.mul(g, h)
                except DegreeOverflow:
                    continue
                if A.mul(self(g), self(h)) != self(gh):
                    bad.append(("J(g)J(h) = J(gh)", g, h))
        return Report(not bad, H.dim * H.dim, bad)


def inner_action(J: MomentumMap, check: bool = True) -> Action:
    """``h > a = J(h_(1)) a J(S(h_(2)))``."""
    if check:
        rep = J.verify()
        if not rep:
            raise ValueError(f"invalid momentum map: {rep.first()}")
    H, A = J.H, J.A

    def act(i, a):
        out = A.zero()
        for h1, h2 in H.sweedler(H.e(i)):
            out = out + A.mul(A.mul(J(h1), a), J(H.antipode(h2)))
        return out

    return Action(H, A, act, "inner")


def actions_agree(a1: Action, a2: Action, sample=None) -> bool:
    B = list(sample) if sample is not None else a1.A.basis()
    return all(a1.act(h, a) == a2.act(h, a) for h in a1.H.basis() for a in B)


def enumerate_momentum_maps(H: HopfAlgebra, A: FiniteAlgebra, coefficient_range=(-1, 0, 1)) -> list:
    """All ``J`` with ``J(1) = 1`` and basis values drawn from a small coefficient grid
    that pass :meth:`MomentumMap.verify`."""
    vecs = [AlgElem(A, {k: cs(c) for k, c in enumerate(cs_)}) for cs_ in product(coefficient_range, repeat=A.dim)]
    unit_index = next(iter(H.one().vec))
    others = [i for i in range(H.dim) if i != unit_index]
    basis = H.basis()
    # products of basis elements that are themselves multiples of a basis element
    table = {}
    for g in range(H.dim):
        for h in range(H.dim):
            try:
                gh = H.mul(basis[g], basis[h])
            except DegreeOverflow:
                continue
            table[(g, h)] = gh
    found = []
    vals = [None] * H.dim
    vals[unit_index] = A.one()

    def consistent(upto: set) -> bool:
        # prune on every product whose factors and support are already assigned
        for (g, h), gh in table.items():
            if g in upto and h in upto and all(k in upto for k in gh.vec):
                rhs = A.zero()
                for k, c in gh.vec.items():
                    rhs = rhs + vals[k].scale(c)
                if A.mul(vals[g], vals[h]) != rhs:
                    return False
        return True

    def extend(pos: int, assigned: set):
        if pos == len(others):
            J = MomentumMap(H, A, list(vals))
            if J.verify():
                found.append(J)
            return
        i = others[pos]
        for v in vecs:
            vals[i] = v
            now = assigned | {i}
            if consistent(now):
                extend(pos + 1, now)
        vals[i] = None

    extend(0, {unit_index})
    return found


# crossed products

class CrossedProduct:
    """``A x| H`` with ``(a (x) g)(b (x) h) = a (g_(1) > b) (x) g_(2) h``.

    Elements are dicts ``{H basis index: A element}``; zero parts are dropped,
    so dict equality is normal-form equality.
    """

    def __init__(self, action: Action):
        self.action = action
        self.H = action.H
        self.A = action.A

    def _norm(self, d: dict) -> dict:
        return {i: a for i, a in d.items() if a}

    def elem(self, a, h) -> dict:
        """``a (x) h`` with ``h`` a basis index or Hopf element."""
        if isinstance(h, int):
            h = self.H.e(h)
        return self._norm({i: a.scale(c) for i, c in h.vec.items()})

    def one(self) -> dict:
        return self.elem(self.A.one(), self.H.one())

    def add(self, x: dict, y: dict) -> dict:
        out = dict(x)
        for i, a in y.items():
            out[i] = out[i] + a if i in out else a
        return self._norm(out)

    def scale(self, c, x: dict) -> dict:
        return self._norm({i: a.scale(c) for i, a in x.items()})

    def mul(self, x: dict, y: dict) -> dict:
        H, A, act = self.H, self.A, self.action
        out: dict = {}
        for i, a in x.items():
            for g1, g2 in H.sweedler(H.e(i)):
                for j, b in y.items():
                    left = A.mul(a, act.act(g1, b))
                    if not left:
                        continue
                    for k, c in H.mul(g2, H.e(j)).vec.items():
                        term = left.scale(c)
                        out[k] = out[k] + term if k in out else term
        return self._norm(out)

    def star(self, x: dict) -> dict:
        """``(a (x) h)* = h_(1)* > a* (x) h_(2)*``."""
        H, A, act = self.H, self.A, self.action
        out: dict = {}
        for i, a in x.items():
            astar = A.star(a)
            for h1, h2 in H.sweedler(H.e(i)):
                left = act.act(H.star(h1), astar)
                for k, c in H.star(h2).vec.items():
                    term = left.scale(c)
                    out[k] = out[k] + term if k in out else term
        return self._norm(out)

    def basis(self, sample=None) -> list:
        B = list(sample) if sample is not None else self.A.basis()
        return [self.elem(a, i) for a in B for i in range(self.H.dim)]

    def verify(self, sample=None) -> Report:
        """Associativity, unit and *-axioms over basis triples."""
        X = self.basis(sample)
        one = self.one()
        bad = []
        n = 0
        for x in X:
            n += 1
            if self.mul(one, x) != x or self.mul(x, one) != x:
                bad.append(("unit", x))
            if self.star(self.star(x)) != x:
                bad.append(("star involution", x))
            for y in X:
                xy = self.mul(x, y)
                if self.star(xy) != self.mul(self.star(y), self.star(x)):
                    bad.append(("(xy)* = y* x*", x, y))
                for z in X:
                    n += 1
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)):
                        bad.append(("associativity", x, y, z))
        if self.star(one) != one:
            bad.append(("(1 (x) 1)* = 1 (x) 1",))
        return Report(not bad, n, bad)


def componentwise_inner(A, x: Sequence, y: Sequence):
    """``<x, y>_A = sum x_i* y_i`` on the free module ``A^k``."""
    out = A.zero()
    for a, b in zip(x, y):
        out = out + A.mul(A.star(a), b)
    return out


class CrossedModule:
    """``E (x) H`` for ``E = A^k`` with componentwise action, carrying the
    ``A x| H``-valued inner product
    ``<x (x) g, y (x) h> = (g_(1)* > <x, y>_A) (x) g_(2)* h``.
    Elements are dicts ``{H basis index: tuple of k A-elements}``.
    """

    def __init__(self, action: Action, rank: int):
        self.action = action
        self.rank = rank
        self.cp = CrossedProduct(action)
        self.H, self.A = action.H, action.A

    def elem(self, xs: Sequence, h) -> dict:
        if isinstance(h, int):
            h = self.H.e(h)
        return self._norm({i: tuple(a.scale(c) for a in xs) for i, c in h.vec.items()})

    def _norm(self, d):
        return {i: v for i, v in d.items() if any(v)}

    def add(self, x: dict, y: dict) -> dict:
        out = dict(x)
        for i, v in y.items():
            out[i] = tuple(a + b for a, b in zip(out[i], v)) if i in out else v
        return self._norm(out)

    def scale(self, c, x: dict) -> dict:
        return self._norm({i: tuple(a.scale(c) for a in v) for i, v in x.items()})

    def inner(self, x: dict, y: dict) -> dict:
        H, A, act, cp = self.H, self.A, self.action, self.cp
        out: dict = {}
        for i, xs in x.items():
            for j, ys in y.items():
                base = componentwise_inner(A, xs, ys)
                for g1, g2 in H.sweedler(H.e(i)):
                    left = act.act(H.star(g1), base)
                    right = H.mul(H.star(g2), H.e(j))
                    out = cp.add(out, cp.elem(left, right))
        return out

    def right_mul(self, x: dict, y: dict) -> dict:
        """``(e (x) h)(b (x) k) = e (h_(1) > b) (x) h_(2) k``."""
        H, A, act = self.H, self.A, self.action
        out: dict = {}
        for i, xs in x.items():
            for h1, h2 in H.sweedler(H.e(i)):
                for j, b in y.items():
                    hb = act.act(h1, b)
                    comp = tuple(A.mul(e, hb) for e in xs)
                    for k, c in H.mul(h2, H.e(j)).vec.items():
                        term = {k: tuple(a.scale(c) for a in comp)}
                        out = self.add(out, term)
        return out

    def basis(self) -> list:
        out = []
        for pos in range(self.rank):
            for a in self.A.basis():
                xs = tuple(a if p == pos else self.A.zero() for p in range(self.rank))
                for i in range(self.H.dim):
                    out.append(self.elem(xs, i))
        return out

    def degenerate_subspace(self) -> list:
        """Basis (as coefficient vectors over :meth:`basis`) of ``{v : <w, v> = 0 for all w}``.

        By ``<v, w>* = <w, v>`` this is also the left radical.  Requires a
        finite-basis ``A``.
        """
        B = self.basis()
        cpB = [(i, k) for i in range(self.H.dim) for k in range(self.A.dim)]
        rows = []
        for w in B:
            cols = []
            for v in B:
                ip = self.inner(w, v)
                cols.append([ip.get(i, self.A.zero()).coeff(k) for i, k in cpB])
            # each output coordinate gives one linear equation in v
            for r in range(len(cpB)):
                rows.append(tuple(col[r] for col in cols))
        return linalg.kernel(tuple(rows))


def h_invariant_star_check(act: Action, spec: StarSpec, pairs) -> Report:
    """``h > (f * g) = (h_(1) > f) * (h_(2) > g)`` on sample pairs."""
    H = act.H
    bad = []
    n = 0
    for h in H.basis():
        for f, g in pairs:
            n += 1
            lhs = act.act(h, star(spec, f, g))
            rhs = act.A.zero()
            for h1, h2 in H.sweedler(h):
                rhs = rhs + star(spec, act.act(h1, f), act.act(h2, g))
            if lhs != rhs:
                bad.append((h, f, g))
    return Report(not bad, n, bad)


def inner_actions_trivial_on_commutative(H: HopfAlgebra, A: FiniteAlgebra, grid=(-1, 0, 1)) -> Report:
    """Obstruction witness: every momentum map into a commutative ``A`` induces the trivial action."""
    if not A.is_commutative():
        raise ValueError("witness needs a commutative target")
    maps = enumerate_momentum_maps(H, A, grid)
    triv = trivial_action(H, A)
    bad = [J for J in maps if not actions_agree(inner_action(J, check=False), triv)]
    return Report(not bad, len(maps), bad)
