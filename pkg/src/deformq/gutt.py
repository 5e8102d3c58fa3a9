"""The Gutt star product on Pol(g*)[[lam]].

Polynomials on g* are dicts ``(monomial, lam_power) -> CScalar`` where a
monomial is a nondecreasing tuple of generator indices (commuting variables).
The product is transported from ``U_lam(g)`` through total symmetrisation:
``f * g = sym^-1(sym(f) sym(g))``.  With this normalisation
``x * y - y * x = lam [x, y]`` for generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Callable

from .lie import PBW, LieAlgebra
from .scalars import CScalar, cs


def _add(out: dict, key, c):
    v = out.get(key)
    v = c if v is None else v + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


class PBWPoly:
    __slots__ = ("alg", "terms")

    def __init__(self, alg: "GuttAlgebra", terms: dict):
        self.alg = alg
        self.terms = {k: v for k, v in terms.items() if v and k[1] <= alg.N}

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in self.alg.coerce(other).terms.items():
            _add(out, k, v)
        return PBWPoly(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return PBWPoly(self.alg, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self.alg.coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "PBWPoly":
        c = cs(c)
        return PBWPoly(self.alg, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        """Commutative (undeformed) product."""
        if not isinstance(other, PBWPoly):
            return self.scale(other)
        out: dict = {}
        for (m1, k1), c1 in self.terms.items():
            for (m2, k2), c2 in other.terms.items():
                if k1 + k2 <= self.alg.N:
                    _add(out, (tuple(sorted(m1 + m2)), k1 + k2), c1 * c2)
        return PBWPoly(self.alg, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if isinstance(other, PBWPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def lam_order(self):
        return min((k for (_, k) in self.terms), default=float("inf"))

    def lam_part(self, k: int) -> "PBWPoly":
        return PBWPoly(self.alg, {(m, 0): v for (m, j), v in self.terms.items() if j == k})

    def degree(self) -> int:
        return max((len(m) for (m, _) in self.terms), default=0)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (m, k), c in sorted(self.terms.items(), key=lambda t: (t[0][1], t[0][0])):
            f = [f"e{i + 1}" for i in m] + (["lam" if k == 1 else f"lam^{k}"] if k else [])
            parts.append("*".join([f"({c})"] + f))
        return " + ".join(parts)


class GuttAlgebra:
    def __init__(self, lie: LieAlgebra, N: int = 6):
        self.lie = lie
        self.N = N
        self.pbw = PBW(lie, N)
        self._sym_cache: dict = {}

    def coerce(self, x) -> PBWPoly:
        if isinstance(x, PBWPoly):
            return x
        return PBWPoly(self, {((), 0): cs(x)})

    def one(self) -> PBWPoly:
        return self.coerce(1)

    def lam(self) -> PBWPoly:
        return PBWPoly(self, {((), 1): CScalar(1)})

    def gen(self, i: int) -> PBWPoly:
        return PBWPoly(self, {((i,), 0): CScalar(1)})

    def poly(self, terms: dict) -> PBWPoly:
        """From ``{monomial tuple or (monomial, lam_power): coefficient}``."""
        out = {}
        for k, v in terms.items():
            if k and isinstance(k[0], tuple):
                out[(tuple(sorted(k[0])), k[1])] = cs(v)
            else:
                out[(tuple(sorted(k)), 0)] = cs(v)
        return PBWPoly(self, out)

    def vector(self, vec: dict) -> PBWPoly:
        """Linear polynomial ``sum v_i e_i``."""
        return PBWPoly(self, {((i,), 0): cs(v) for i, v in vec.items()})

    # symmetrisation
    def sym_monomial(self, mono: tuple) -> dict:
        hit = self._sym_cache.get(mono)
        if hit is not None:
            return hit
        # average over words = (1/k) sum_i a_i e_i sym(x^(a - 1_i))
        k = len(mono)
        if k <= 1:
            out = {(mono, 0): CScalar(1)}
        else:
            out = {}
            for i in sorted(set(mono)):
                idx = mono.index(i)
                rest = self.sym_monomial(mono[:idx] + mono[idx + 1:])
                w = CScalar(Fraction(mono.count(i), k))
                for key, c in self.pbw.mul({((i,), 0): CScalar(1)}, rest).items():
                    _add(out, key, c * w)
        self._sym_cache[mono] = out
        return out

    def sym_monomial_by_words(self, mono: tuple) -> dict:
        """Reference version: literal average over all distinct words."""
        words = set(permutations(mono))
        w = CScalar(Fraction(1, len(words)))
        out: dict = {}
        for word in words:
            for key, c in self.pbw.reduce(word).items():
                _add(out, key, c * w)
        return out

    def sym(self, f: PBWPoly) -> dict:
        out: dict = {}
        for (m, k), c in f.terms.items():
            for (m2, k2), c2 in self.sym_monomial(m).items():
                if k + k2 <= self.N:
                    _add(out, (m2, k + k2), c * c2)
        return out

    def desym(self, u: dict) -> PBWPoly:
        """Inverse of :meth:`sym`, peeling off the top degree each round."""
        u = dict(u)
        found: dict = {}
        while u:
            top = max(len(m) for (m, _) in u)
            lead = {key: c for key, c in u.items() if len(key[0]) == top}
            for key, c in lead.items():
                _add(found, key, c)
            for key, c in self.sym(PBWPoly(self, lead)).items():
                _add(u, key, -c)
        return PBWPoly(self, found)

    def star(self, f: PBWPoly, g: PBWPoly) -> PBWPoly:
        return self.desym(self.pbw.mul(self.sym(f), self.sym(g)))

    def commutator(self, f: PBWPoly, g: PBWPoly) -> PBWPoly:
        return self.star(f, g) - self.star(g, f)

    def bracket_vector(self, xi: dict, eta: dict) -> dict:
        out: dict = {}
        for i, a in xi.items():
            for j, b in eta.items():
                for k, c in self.lie.bracket(i, j).items():
                    _add(out, k, cs(a) * cs(b) * c)
        return out

    def linear_poisson(self, f: PBWPoly, g: PBWPoly) -> PBWPoly:
        """``{f, g}(x) = sum_k x_k c_ij^k d_i f d_j g`` (λ-free inputs)."""
        out = PBWPoly(self, {})
        d = self.lie.dim
        for i in range(d):
            for j in range(d):
                br = self.lie.bracket(i, j)
                if not br:
                    continue
                lin = PBWPoly(self, {((k,), 0): v for k, v in br.items()})
                out = out + lin * self.partial(f, i) * self.partial(g, j)
        return out

    def partial(self, f: PBWPoly, i: int) -> PBWPoly:
        out: dict = {}
        for (m, k), c in f.terms.items():
            e = m.count(i)
            if e:
                idx = m.index(i)
                _add(out, (m[:idx] + m[idx + 1:], k), c * e)
        return PBWPoly(self, out)


def gutt_star(alg: GuttAlgebra, f: PBWPoly, g: PBWPoly) -> PBWPoly:
    return alg.star(f, g)


def pbw_reduce(lie: LieAlgebra, word, N: int = 6) -> dict:
    return PBW(lie, N).reduce(tuple(word))


@dataclass
class MomentumReport:
    defect: object
    order: object
    constant: object

    @property
    def vanishes(self) -> bool:
        return not self.defect


def momentum_identity_check(J: Callable, mul: Callable, lam, bracket: Callable, xi: dict, eta: dict, c) -> MomentumReport:
    """Defect ``J(xi) * J(eta) - J(eta) * J(xi) - c lam J([xi, eta])``.

    ``J`` maps a coefficient dict over generators to the target algebra,
    ``mul`` is its (star) product and ``bracket`` returns ``[xi, eta]`` as a dict.
    """
    a, b = J(xi), J(eta)
    defect = mul(a, b) - mul(b, a) - (lam * J(bracket(xi, eta))).scale(c)
    return MomentumReport(defect, defect.lam_order(), cs(c))


def gutt_momentum_check(alg: GuttAlgebra, xi: dict, eta: dict, c=1) -> MomentumReport:
    """``J = id`` into the Gutt algebra."""
    return momentum_identity_check(alg.vector, alg.star, alg.lam(), alg.bracket_vector, xi, eta, c)


@dataclass
class OrderGap:
    commutator_order: object
    image_order: object

    @property
    def gap(self):
        return self.commutator_order - self.image_order


def order_gap_witness(alg: GuttAlgebra, xi: dict, eta: dict) -> OrderGap:
    """With ``J = id`` and the undeformed coproduct, a homomorphism would need
    ``J(xi) * J(eta) - J(eta) * J(xi) = J([xi, eta])``; the left side has
    λ-order >= 1, the right side order 0 whenever the bracket is nonzero."""
    comm = alg.commutator(alg.vector(xi), alg.vector(eta))
    image = alg.vector(alg.bracket_vector(xi, eta))
    return OrderGap(comm.lam_order(), image.lam_order())
