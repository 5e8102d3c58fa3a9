"""Fedosov construction on flat R^{2n} with constant symplectic form.

Fiber elements live in ``Pol(x) (x) S(y) (x) Lambda(dx)`` with λ-powers; a
component is keyed by ``(x_exps, y_exps, form, lam_power)`` where ``form`` is a
strictly increasing tuple of indices of ``dx``.  Coordinates are ordered
``q1..qn, p1..pn`` on base, fiber and forms alike.

Gradings: ``deg_s`` = total y-degree, ``deg_a`` = form degree,
``Deg = deg_s + 2 deg_lam``.  All recursions are truncated in ``Deg``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .phasepoly import REAL, Bidifferential, StarElem
from .scalars import ONE, ZERO, CScalar, I, as_rat, cs


class LambdaDivisionError(ArithmeticError):
    """Dividing by λ an element with a λ⁰ component."""


def _add(out: dict, key, c):
    v = out.get(key)
    v = c if v is None else v + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def _wedge(a: tuple, b: tuple):
    """``dx^a ^ dx^b`` as (sign, sorted tuple) or ``None`` if it vanishes."""
    if set(a) & set(b):
        return None
    seq = list(a + b)
    sign = 1
    # count inversions
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign, tuple(sorted(seq))


def _mat_rat(m) -> tuple:
    return tuple(tuple(as_rat(x) for x in row) for row in m)


@dataclass(frozen=True)
class SymplecticData:
    """Constant ``omega`` (``omega[i][j]`` is the coefficient of ``dx^i ^ dx^j``
    in ``1/2 omega_ij dx^i ^ dx^j``), its Poisson tensor ``Lambda = -omega^-1``
    and the central series ``Omega = sum_k lam^k Omega_k`` (``k >= 1``)."""

    n: int
    omega: tuple
    Omega: tuple = ()  # ((k, matrix), ...)
    Lambda: tuple = field(init=False)

    def __post_init__(self):
        om = _mat_rat(self.omega)
        m = 2 * self.n
        if len(om) != m or any(len(r) != m for r in om):
            raise ValueError("omega must be 2n x 2n")
        if any(om[i][j] != -om[j][i] for i in range(m) for j in range(m)):
            raise ValueError("omega must be antisymmetric")
        inv = linalg.inverse(linalg.mat(om))
        lam_t = tuple(tuple(-x.re for x in row) for row in inv)
        object.__setattr__(self, "omega", om)
        object.__setattr__(self, "Lambda", lam_t)
        Om = []
        for k, mat_ in self.Omega:
            if k < 1:
                raise ValueError("Omega must have λ-order >= 1")
            mm = tuple(tuple(cs(x) for x in row) for row in mat_)
            if any(mm[i][j] != -mm[j][i] for i in range(m) for j in range(m)):
                raise ValueError("Omega components must be antisymmetric")
            Om.append((k, mm))
        object.__setattr__(self, "Omega", tuple(Om))

    @classmethod
    def canonical(cls, n: int, Omega=()) -> "SymplecticData":
        """``omega = sum dq^i ^ dp_i``, giving ``Lambda^{q p} = +1``."""
        m = 2 * n
        om = [[0] * m for _ in range(m)]
        for i in range(n):
            om[i][n + i] = 1
            om[n + i][i] = -1
        return cls(n, tuple(map(tuple, om)), tuple(Omega))

    def omega_times_lambda(self):
        m = 2 * self.n
        return tuple(tuple(sum(self.omega[i][k] * self.Lambda[k][j] for k in range(m)) for j in range(m))
                     for i in range(m))

    def is_real(self) -> bool:
        return all(x.is_real() for _, mm in self.Omega for row in mm for x in row)


class FiberElem:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def zero(cls, n):
        return cls(n, {})

    @classmethod
    def from_base(cls, f: StarElem) -> "FiberElem":
        if f.chart != REAL:
            raise ValueError("Fedosov construction works in the real chart")
        z = (0,) * (2 * f.dim)
        return cls(f.dim, {(e, z, (), k): c for (e, k), c in f.terms.items()})

    @classmethod
    def monomial(cls, n, x=None, y=None, form=(), k=0, c=1) -> "FiberElem":
        m = 2 * n
        x = tuple(x) if x else (0,) * m
        y = tuple(y) if y else (0,) * m
        form = tuple(form)
        if len(set(form)) != len(form):
            return cls(n, {})
        sign = 1
        seq = list(form)
        for i in range(len(seq)):
            for j in range(i + 1, len(seq)):
                if seq[i] > seq[j]:
                    sign = -sign
        return cls(n, {(x, y, tuple(sorted(form)), k): cs(c) * sign})

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            _add(out, k, v)
        return FiberElem(self.n, out)

    def __neg__(self):
        return FiberElem(self.n, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = cs(c)
        return FiberElem(self.n, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, FiberElem) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"FiberElem({len(self.terms)} terms)"

    # gradings
    @staticmethod
    def Deg_of(key) -> int:
        return sum(key[1]) + 2 * key[3]

    def truncate(self, cap: int) -> "FiberElem":
        return FiberElem(self.n, {k: v for k, v in self.terms.items() if self.Deg_of(k) <= cap})

    def Deg_part(self, d: int) -> "FiberElem":
        return FiberElem(self.n, {k: v for k, v in self.terms.items() if self.Deg_of(k) == d})

    def form_part(self, m: int) -> "FiberElem":
        return FiberElem(self.n, {k: v for k, v in self.terms.items() if len(k[2]) == m})

    def Deg(self) -> "FiberElem":
        """The Deg derivation: multiply each component by its total degree."""
        return FiberElem(self.n, {k: v * self.Deg_of(k) for k, v in self.terms.items()})

    def deg_a(self) -> "FiberElem":
        return FiberElem(self.n, {k: v * len(k[2]) for k, v in self.terms.items()})

    def deg_s(self) -> "FiberElem":
        return FiberElem(self.n, {k: v * sum(k[1]) for k, v in self.terms.items()})

    def max_Deg(self) -> int:
        return max((self.Deg_of(k) for k in self.terms), default=-1)

    def min_Deg(self):
        return min((self.Deg_of(k) for k in self.terms), default=float("inf"))

    def lam_order(self):
        return min((k[3] for k in self.terms), default=float("inf"))

    def form_degrees(self) -> set:
        return {len(k[2]) for k in self.terms}


def delta(a: FiberElem) -> FiberElem:
    """``delta = dx^i ^ d/dy^i``."""
    out: dict = {}
    for (x, y, form, k), c in a.terms.items():
        for i, e in enumerate(y):
            if not e or i in form:
                continue
            sign = -1 if sum(1 for j in form if j < i) % 2 else 1
            y2 = y[:i] + (e - 1,) + y[i + 1:]
            _add(out, (x, y2, tuple(sorted(form + (i,))), k), c * (e * sign))
    return FiberElem(a.n, out)


def delta_star(a: FiberElem) -> FiberElem:
    """``delta* = y^i i_a(d/dx^i)``."""
    out: dict = {}
    for (x, y, form, k), c in a.terms.items():
        for t, i in enumerate(form):
            sign = -1 if t % 2 else 1
            y2 = y[:i] + (y[i] + 1,) + y[i + 1:]
            _add(out, (x, y2, form[:t] + form[t + 1:], k), c * sign)
    return FiberElem(a.n, out)


def delta_inv(a: FiberElem) -> FiberElem:
    """``delta^-1 = delta* / (deg_s + deg_a)`` on bihomogeneous parts, 0 on (0, 0)."""
    out: dict = {}
    for (x, y, form, k), c in a.terms.items():
        w = sum(y) + len(form)
        if not w:
            continue
        for key, v in delta_star(FiberElem(a.n, {(x, y, form, k): c})).terms.items():
            _add(out, key, v * Fraction(1, w))
    return FiberElem(a.n, out)


def sigma(a: FiberElem, N: int | None = None) -> StarElem:
    """Projection onto ``deg_s = deg_a = 0``, returned as a base polynomial."""
    n = a.n
    z = (0,) * (2 * n)
    terms = {(x, k): c for (x, y, form, k), c in a.terms.items() if y == z and not form}
    if N is None:
        N = max((k for (_, k) in terms), default=0)
    return StarElem(n, N, terms, REAL)


def sigma_fiber(a: FiberElem) -> FiberElem:
    """:func:`sigma` kept inside the fiber algebra."""
    z = (0,) * (2 * a.n)
    return FiberElem(a.n, {k: v for k, v in a.terms.items() if k[1] == z and not k[2]})


def D(a: FiberElem) -> FiberElem:
    """Flat covariant differential ``dx^i ^ d/dx^i`` on base coefficients."""
    out: dict = {}
    for (x, y, form, k), c in a.terms.items():
        for i, e in enumerate(x):
            if not e or i in form:
                continue
            sign = -1 if sum(1 for j in form if j < i) % 2 else 1
            x2 = x[:i] + (e - 1,) + x[i + 1:]
            _add(out, (x2, y, tuple(sorted(form + (i,))), k), c * (e * sign))
    return FiberElem(a.n, out)


class FiberAlgebra:
    """Fiberwise Weyl-Moyal product ``mu o exp((i lam/2) Lambda^{kl} d_yk (x) d_yl)``."""

    def __init__(self, data: SymplecticData):
        self.data = data
        self.n = data.n
        m = 2 * data.n
        half_i = CScalar(0, Fraction(1, 2))
        chans = [(k, l, half_i * data.Lambda[k][l]) for k in range(m) for l in range(m) if data.Lambda[k][l]]
        self.engine = Bidifferential(chans)
        self._budget = 10 ** 6

    def mul(self, a: FiberElem, b: FiberElem, cap: int | None = None) -> FiberElem:
        out: dict = {}
        Dg = FiberElem.Deg_of
        for ka, ca in a.terms.items():
            da = Dg(ka)
            x1, y1, f1, k1 = ka
            for kb, cb in b.terms.items():
                if cap is not None and da + Dg(kb) > cap:
                    continue
                x2, y2, f2, k2 = kb
                w = _wedge(f1, f2)
                if w is None:
                    continue
                sign, form = w
                x = tuple(p + q for p, q in zip(x1, x2))
                cab = ca * cb * sign
                for ymono, s, coeff in self.engine.pair(y1, y2, self._budget):
                    _add(out, (x, ymono, form, k1 + k2 + s), cab * coeff)
        return FiberElem(a.n, out)

    def ad(self, a: FiberElem, b: FiberElem, cap: int | None = None) -> FiberElem:
        """Graded commutator ``a o b - (-1)^{mn} b o a`` summed over form degrees."""
        out = FiberElem.zero(a.n)
        for m in a.form_degrees():
            am = a.form_part(m)
            for n_ in b.form_degrees():
                bn = b.form_part(n_)
                sgn = -1 if (m * n_) % 2 else 1
                out = out + self.mul(am, bn, cap) - self.mul(bn, am, cap).scale(sgn)
        return out


def i_over_lambda(a: FiberElem) -> FiberElem:
    """``(i/lam) a``; requires λ-order >= 1."""
    if a.lam_order() < 1:
        raise LambdaDivisionError("element has a λ⁰ component")
    return FiberElem(a.n, {(x, y, f, k - 1): I * c for (x, y, f, k), c in a.terms.items()})


def omega_form(data: SymplecticData) -> FiberElem:
    """``1 (x) Omega`` as a fiber element."""
    n = data.n
    m = 2 * n
    out = FiberElem.zero(n)
    for k, mm in data.Omega:
        for i in range(m):
            for j in range(i + 1, m):
                if mm[i][j]:
                    out = out + FiberElem.monomial(n, form=(i, j), k=k, c=mm[i][j])
    return out


class Fedosov:
    """Flat Fedosov machinery for a fixed truncation order ``N``.

    ``r`` is carried up to ``Deg <= 2N + 2`` which is enough for ``tau`` up to
    ``Deg <= 2N`` and hence for the product up to ``lam^N``.
    """

    def __init__(self, data: SymplecticData, N: int):
        self.data = data
        self.N = N
        self.fib = FiberAlgebra(data)
        self.tau_cap = 2 * N
        self.r_cap = 2 * N + 2
        self.r = self._solve_r()

    def _solve_r(self) -> FiberElem:
        n = self.data.n
        seed = omega_form(self.data)
        r = FiberElem.zero(n)
        cap = self.r_cap
        while True:
            rr = self.fib.mul(r, r, cap + 2)
            quad = i_over_lambda(rr) if rr else rr
            new = delta_inv(D(r) + quad + seed).truncate(cap)
            if new == r:
                return r
            r = new

    def r_residual(self) -> FiberElem:
        """``delta r - (D r + (i/lam) r o r + Omega)`` truncated where ``r`` is complete."""
        r = self.r
        rr = self.fib.mul(r, r, self.r_cap + 2)
        rhs = D(r) + (i_over_lambda(rr) if rr else rr) + omega_form(self.data)
        return (delta(r) - rhs).truncate(self.r_cap - 1)

    def ad_r(self, a: FiberElem, cap: int) -> FiberElem:
        """``(i/lam) ad(r) a`` up to ``Deg <= cap``."""
        if not self.r or not a:
            return FiberElem.zero(a.n)
        c = self.fib.ad(self.r, a, cap + 2)
        return i_over_lambda(c).truncate(cap) if c else c

    def fedosov_D(self, a: FiberElem, cap: int) -> FiberElem:
        """``-delta + D + (i/lam) ad(r)``."""
        return (-delta(a) + D(a) + self.ad_r(a, cap)).truncate(cap)

    def tau(self, f: StarElem) -> FiberElem:
        """``sum_k (delta^-1 (D + (i/lam) ad r))^k f`` up to ``Deg <= 2N``."""
        cap = self.tau_cap
        a = FiberElem.from_base(f).truncate(cap)
        out = a
        term = a
        while term:
            term = delta_inv(D(term) + self.ad_r(term, cap)).truncate(cap)
            out = out + term
        return out

    def star(self, f: StarElem, g: StarElem) -> StarElem:
        prod = self.fib.mul(self.tau(f), self.tau(g), self.tau_cap)
        return sigma(prod, max(f.N, self.N)).truncate(f.N)


def fedosov_r(data: SymplecticData, N: int) -> FiberElem:
    return Fedosov(data, N).r


def fedosov_taylor(f: StarElem, data: SymplecticData, N: int) -> FiberElem:
    return Fedosov(data, N).tau(f)


_CACHE: dict = {}


def fedosov_star(f: StarElem, g: StarElem, data: SymplecticData, N: int | None = None) -> StarElem:
    N = f.N if N is None else N
    key = (data, N)
    fed = _CACHE.get(key)
    if fed is None:
        fed = _CACHE[key] = Fedosov(data, N)
    return fed.star(f, g)
