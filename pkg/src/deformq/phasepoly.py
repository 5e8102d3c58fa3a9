"""Phase-space polynomials with coefficients in Q(i)[[lam]].

A :class:`StarElem` is a sparse map ``(exponents, lam_power) -> CScalar``.
Exponents run over ``2n`` variables: ``q1..qn, p1..pn`` in the real chart and
``z1..zn, zb1..zbn`` in the complex chart.  A λ-free element plays the role of
a plain polynomial; :func:`phase_poly` builds those.

All flat star products are exponentials of constant-coefficient
bidifferential operators, so one engine, :class:`Bidifferential`, computes
``mu o exp(lam * sum c (d_a (x) d_b))`` for a list of channels ``(a, b, c)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .scalars import ONE, ZERO, CScalar, I, Series, cs

REAL = "real"
COMPLEX = "complex"


class DimensionMismatch(ValueError):
    pass


class ChartMismatch(ValueError):
    pass


def var_names(n: int, chart: str = REAL) -> list[str]:
    if chart == REAL:
        return [f"q{k}" for k in range(1, n + 1)] + [f"p{k}" for k in range(1, n + 1)]
    return [f"z{k}" for k in range(1, n + 1)] + [f"zb{k}" for k in range(1, n + 1)]


def _ff(e: int, k: int) -> int:
    """Falling factorial e (e-1) ... (e-k+1)."""
    out = 1
    for j in range(k):
        out *= e - j
    return out


class StarElem:
    """Element of Pol(T*R^n)[[lam]] truncated at ``lam^N``."""

    __slots__ = ("dim", "N", "chart", "terms")

    def __init__(self, dim: int, N: int, terms=None, chart: str = REAL):
        self.dim = dim
        self.N = N
        self.chart = chart
        clean = {}
        if terms:
            for key, c in terms.items():
                if key[1] <= N and c:
                    clean[key] = c
        self.terms = clean

    # construction
    @classmethod
    def _raw(cls, dim, N, terms, chart):
        obj = cls.__new__(cls)
        obj.dim, obj.N, obj.chart, obj.terms = dim, N, chart, terms
        return obj

    @classmethod
    def zero(cls, dim: int, N: int, chart: str = REAL) -> "StarElem":
        return cls._raw(dim, N, {}, chart)

    @classmethod
    def const(cls, c, dim: int, N: int, chart: str = REAL) -> "StarElem":
        return cls(dim, N, {((0,) * (2 * dim), 0): cs(c)}, chart)

    @classmethod
    def var(cls, index: int, dim: int, N: int, chart: str = REAL) -> "StarElem":
        e = [0] * (2 * dim)
        e[index] = 1
        return cls(dim, N, {(tuple(e), 0): ONE}, chart)

    @classmethod
    def lam(cls, dim: int, N: int, chart: str = REAL) -> "StarElem":
        return cls(dim, N, {((0,) * (2 * dim), 1): ONE}, chart)

    def like(self, terms) -> "StarElem":
        return StarElem(self.dim, self.N, terms, self.chart)

    def _check(self, other: "StarElem"):
        if self.dim != other.dim:
            raise DimensionMismatch(f"dimensions {self.dim} and {other.dim}")
        if self.N != other.N:
            raise DimensionMismatch(f"truncation orders {self.N} and {other.N}")
        if self.chart != other.chart:
            raise ChartMismatch(f"charts {self.chart} and {other.chart}")

    def _lift(self, other) -> "StarElem":
        if isinstance(other, StarElem):
            self._check(other)
            return other
        return StarElem.const(other, self.dim, self.N, self.chart)

    # vector space
    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            v = c if v is None else v + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return StarElem._raw(self.dim, self.N, out, self.chart)

    __radd__ = __add__

    def __neg__(self):
        return StarElem._raw(self.dim, self.N, {k: -c for k, c in self.terms.items()}, self.chart)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "StarElem":
        c = cs(c)
        if not c:
            return self.like({})
        return StarElem._raw(self.dim, self.N, {k: c * v for k, v in self.terms.items()}, self.chart)

    def __mul__(self, other):
        if isinstance(other, StarElem):
            return poly_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        out = StarElem.const(1, self.dim, self.N, self.chart)
        for _ in range(k):
            out = poly_mul(out, self)
        return out

    def __eq__(self, other):
        if isinstance(other, StarElem):
            return (self.dim, self.N, self.chart, self.terms) == (other.dim, other.N, other.chart, other.terms)
        if isinstance(other, (int, Fraction, CScalar)):
            return self == StarElem.const(other, self.dim, self.N, self.chart)
        return NotImplemented

    def __hash__(self):
        return hash((self.dim, self.N, self.chart, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # inspection
    def lam_order(self):
        """λ-adic order; ``inf`` for zero."""
        if not self.terms:
            return float("inf")
        return min(k for (_, k) in self.terms)

    def lam_part(self, k: int) -> "StarElem":
        """Coefficient of ``lam^k`` as a λ-free element."""
        return self.like({(e, 0): c for (e, j), c in self.terms.items() if j == k})

    def truncate(self, N: int) -> "StarElem":
        return StarElem(self.dim, N, {k: c for k, c in self.terms.items() if k[1] <= N}, self.chart)

    def series(self, exps: Sequence[int]) -> Series:
        """The Series coefficient of one monomial."""
        exps = tuple(exps)
        return Series([self.terms.get((exps, k), ZERO) for k in range(self.N + 1)], self.N)

    def monomials(self):
        return sorted({e for (e, _) in self.terms})

    def degree(self) -> int:
        return max((sum(e) for (e, _) in self.terms), default=0)

    def conj(self) -> "StarElem":
        """Complex conjugation; λ is real, ``z`` and ``zb`` swap."""
        n = self.dim
        out = {}
        for (e, k), c in self.terms.items():
            if self.chart == COMPLEX:
                e = e[n:] + e[:n]
            out[(e, k)] = c.conj()
        return StarElem._raw(self.dim, self.N, out, self.chart)

    def __repr__(self):
        return f"StarElem({format_elem(self)})"

    def __str__(self):
        return format_elem(self)


def phase_poly(terms: dict, dim: int, N: int = 0, chart: str = REAL) -> StarElem:
    """λ-free element from ``{exponents: coefficient}``."""
    return StarElem(dim, N, {(tuple(e), 0): cs(c) for e, c in terms.items()}, chart)


def coordinates(dim: int, N: int, chart: str = REAL):
    """``(xs, ys)``: the q (or z) block and the p (or zb) block."""
    xs = [StarElem.var(k, dim, N, chart) for k in range(dim)]
    ys = [StarElem.var(dim + k, dim, N, chart) for k in range(dim)]
    return xs, ys


def format_elem(f: StarElem) -> str:
    if not f.terms:
        return "0"
    names = var_names(f.dim, f.chart)
    parts = []
    for (e, k), c in sorted(f.terms.items(), key=lambda t: (t[0][1], tuple(-x for x in t[0][0]))):
        factors = []
        for name, x in zip(names, e):
            if x == 1:
                factors.append(name)
            elif x:
                factors.append(f"{name}^{x}")
        if k == 1:
            factors.append("lam")
        elif k:
            factors.append(f"lam^{k}")
        if c.im and c.re:
            coeff = f"({c.re} + {c.im}*i)"
        elif c.im:
            coeff = f"({c.im}*i)" if c.im.denominator != 1 or c.im < 0 else f"{c.im}*i"
        else:
            coeff = f"({c.re})" if c.re.denominator != 1 or c.re < 0 else str(c.re)
        parts.append("*".join([coeff] + factors) if factors else coeff)
    return " + ".join(parts)


def poly_mul(f: StarElem, g: StarElem) -> StarElem:
    """Pointwise product μ."""
    f._check(g)
    N = f.N
    out: dict = {}
    for (e1, k1), c1 in f.terms.items():
        for (e2, k2), c2 in g.terms.items():
            k = k1 + k2
            if k > N:
                continue
            key = (tuple(a + b for a, b in zip(e1, e2)), k)
            v = out.get(key)
            out[key] = c1 * c2 if v is None else v + c1 * c2
    return f.like(out)


def partial(f: StarElem, var: int) -> StarElem:
    if not 0 <= var < 2 * f.dim:
        raise IndexError(f"variable index {var} out of range")
    out = {}
    for (e, k), c in f.terms.items():
        x = e[var]
        if x:
            e2 = e[:var] + (x - 1,) + e[var + 1:]
            out[(e2, k)] = c * x
    return f.like(out)


def poisson(f: StarElem, g: StarElem) -> StarElem:
    """``sum_i d_qi f d_pi g - d_pi f d_qi g``.

    In the complex chart the same bracket reads
    ``-2i sum_i (d_zi f d_zbi g - d_zbi f d_zi g)``.
    """
    f._check(g)
    n = f.dim
    out = f.like({})
    for i in range(n):
        out = out + poly_mul(partial(f, i), partial(g, n + i)) - poly_mul(partial(f, n + i), partial(g, i))
    if f.chart == COMPLEX:
        out = out.scale(CScalar(0, -2))
    return out


def _substitute(f: StarElem, images: Sequence[StarElem], chart: str) -> StarElem:
    """Replace variable ``j`` of ``f`` by ``images[j]`` (λ-free linear forms)."""
    n = f.dim
    zero = StarElem.zero(n, f.N, chart)
    powers: dict = {}

    def power(j, x):
        key = (j, x)
        if key not in powers:
            powers[key] = images[j] ** x if x else StarElem.const(1, n, f.N, chart)
        return powers[key]

    out = zero
    for (e, k), c in f.terms.items():
        term = StarElem(n, f.N, {((0,) * (2 * n), k): c}, chart)
        for j, x in enumerate(e):
            if x:
                term = poly_mul(term, power(j, x))
        out = out + term
    return out


def to_complex(f: StarElem) -> StarElem:
    """Rewrite in ``z = q + ip``: ``q = (z+zb)/2``, ``p = (z-zb)/(2i)``."""
    if f.chart != REAL:
        raise ChartMismatch("element is already in the complex chart")
    n = f.dim
    zs, zbs = coordinates(n, f.N, COMPLEX)
    half = Fraction(1, 2)
    minus_half_i = CScalar(0, Fraction(-1, 2))
    images = [(zs[k] + zbs[k]).scale(half) for k in range(n)]
    images += [(zs[k] - zbs[k]).scale(minus_half_i) for k in range(n)]
    return _substitute(f, images, COMPLEX)


def to_real(f: StarElem) -> StarElem:
    """Inverse of :func:`to_complex`: ``z = q + ip``, ``zb = q - ip``."""
    if f.chart != COMPLEX:
        raise ChartMismatch("element is already in the real chart")
    n = f.dim
    qs, ps = coordinates(n, f.N, REAL)
    images = [qs[k] + ps[k].scale(I) for k in range(n)]
    images += [qs[k] - ps[k].scale(I) for k in range(n)]
    return _substitute(f, images, REAL)


class LinearMap:
    """Invertible linear map of the ``2n`` coordinates.

    ``matrix[i][j]`` is the coefficient of coordinate ``j`` in the image of
    coordinate ``i``: the point ``x`` is sent to ``M x``.
    """

    __slots__ = ("matrix", "chart", "_inv")

    def __init__(self, matrix, chart: str = REAL):
        self.matrix = linalg.mat(matrix)
        self.chart = chart
        m = len(self.matrix)
        if m % 2 or any(len(r) != m for r in self.matrix):
            raise ValueError("need a square matrix of even size")
        self._inv = linalg.inverse(self.matrix)

    @property
    def dim(self) -> int:
        return len(self.matrix) // 2

    def inverse(self) -> "LinearMap":
        return LinearMap(self._inv, self.chart)

    def compose(self, other: "LinearMap") -> "LinearMap":
        """``self o other``."""
        return LinearMap(linalg.matmul(self.matrix, other.matrix), self.chart)

    def is_symplectic(self) -> bool:
        J = canonical_J(self.dim)
        M = self.matrix
        return linalg.matmul(linalg.matmul(linalg.transpose(M), J), M) == J

    def __eq__(self, other):
        return isinstance(other, LinearMap) and self.matrix == other.matrix and self.chart == other.chart

    def __hash__(self):
        return hash((self.matrix, self.chart))


def canonical_J(n: int):
    rows = []
    for i in range(2 * n):
        row = [0] * (2 * n)
        if i < n:
            row[n + i] = 1
        else:
            row[i - n] = -1
        rows.append(row)
    return linalg.mat(rows)


def apply_linear(g: LinearMap, f: StarElem) -> StarElem:
    """Left action ``g.f = f o g^{-1}``."""
    if g.dim != f.dim:
        raise DimensionMismatch("map and element dimensions differ")
    if g.chart != f.chart:
        raise ChartMismatch("map and element live in different charts")
    n = f.dim
    coords = [StarElem.var(j, n, f.N, f.chart) for j in range(2 * n)]
    images = []
    for row in g._inv:
        img = StarElem.zero(n, f.N, f.chart)
        for c, x in zip(row, coords):
            if c:
                img = img + x.scale(c)
        images.append(img)
    return _substitute(f, images, f.chart)


class Bidifferential:
    """``mu o exp(lam * sum_j c_j d_{a_j} (x) d_{b_j})`` on monomial pairs.

    The channels commute, so the exponential factorises and each channel
    contributes ``(c lam)^k / k!`` times derivatives of order ``k`` on each
    side.  Results for a monomial pair are memoised.
    """

    def __init__(self, channels: Iterable[tuple]):
        self.channels = tuple((a, b, cs(c)) for a, b, c in channels)
        self._cache: dict = {}

    def pair(self, e1: tuple, e2: tuple, budget: int) -> list:
        key = (e1, e2, budget)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        out: dict = {}
        chans = self.channels

        def walk(j, f, g, k_tot, coeff):
            if j == len(chans):
                mono = tuple(x + y for x, y in zip(f, g))
                kk = (mono, k_tot)
                v = out.get(kk)
                out[kk] = coeff if v is None else v + coeff
                return
            a, b, c = chans[j]
            walk(j + 1, f, g, k_tot, coeff)
            fa, gb = f[a], g[b]
            cpow = ONE
            fact = 1
            for k in range(1, min(fa, gb, budget - k_tot) + 1):
                cpow = cpow * c
                fact *= k
                w = cpow * Fraction(_ff(fa, k) * _ff(gb, k), fact)
                f2 = f[:a] + (fa - k,) + f[a + 1:]
                g2 = g[:b] + (gb - k,) + g[b + 1:]
                walk(j + 1, f2, g2, k_tot + k, coeff * w)

        walk(0, e1, e2, 0, ONE)
        res = [(m, k, c) for (m, k), c in out.items() if c]
        self._cache[key] = res
        return res

    def __call__(self, f: StarElem, g: StarElem) -> StarElem:
        f._check(g)
        N = f.N
        out: dict = {}
        for (e1, k1), c1 in f.terms.items():
            for (e2, k2), c2 in g.terms.items():
                base = k1 + k2
                if base > N:
                    continue
                c12 = c1 * c2
                for mono, k, w in self.pair(e1, e2, N - base):
                    key = (mono, base + k)
                    v = out.get(key)
                    out[key] = c12 * w if v is None else v + c12 * w
        return f.like(out)


def exp_laplacian(f: StarElem, pairs: Sequence[tuple], c) -> StarElem:
    """``exp(c * lam * sum_(a,b) d_a d_b) f`` on one argument."""
    c = cs(c)
    out = f
    term = f
    k = 0
    while True:
        k += 1
        nxt = f.like({})
        for a, b in pairs:
            nxt = nxt + partial(partial(term, a), b)
        term = StarElem(f.dim, f.N, {(e, j + 1): v * c / k for (e, j), v in nxt.terms.items()}, f.chart)
        if not term:
            return out
        out = out + term
