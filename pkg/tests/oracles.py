"""Reference implementations used only by the tests.

Everything here is written from textbook formulas with plain loops, sharing no
code path with the package beyond the element containers.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import comb, factorial

from deformq.phasepoly import StarElem
from deformq.scalars import CScalar, ZERO


def d(f: StarElem, var: int, times: int = 1) -> StarElem:
    out = {}
    for (e, k), c in f.terms.items():
        x = e[var]
        if x < times:
            continue
        ff = 1
        for j in range(times):
            ff *= x - j
        e2 = list(e)
        e2[var] -= times
        key = (tuple(e2), k)
        out[key] = out.get(key, ZERO) + c * ff
    return StarElem(f.dim, f.N, out, f.chart)


def pointwise(f: StarElem, g: StarElem) -> StarElem:
    out = {}
    for (e1, k1), c1 in f.terms.items():
        for (e2, k2), c2 in g.terms.items():
            if k1 + k2 > f.N:
                continue
            key = (tuple(a + b for a, b in zip(e1, e2)), k1 + k2)
            out[key] = out.get(key, ZERO) + c1 * c2
    return StarElem(f.dim, f.N, out, f.chart)


def shift_lam(f: StarElem, r: int, c: CScalar) -> StarElem:
    out = {(e, k + r): v * c for (e, k), v in f.terms.items() if k + r <= f.N}
    return StarElem(f.dim, f.N, out, f.chart)


def _max_deg(f):
    return max((sum(e) for (e, _), _c in f.terms.items()), default=0)


def two_channel_sum(f, g, left_a, left_b, ca, cb):
    """``sum_{r,s} (ca lam)^r (cb lam)^s / r! s!  d_a^r d_b^s f . d_b'^r d_a'^s g``
    for each degree of freedom independently, with ``a = left_a[i]`` acting on f
    and the partner variable acting on g."""
    n = f.dim
    D = max(_max_deg(f), _max_deg(g))
    acc = StarElem.zero(n, f.N, f.chart)
    ranges = [range(D + 1)] * (2 * n)
    for rs in product(*ranges):
        r, s = rs[:n], rs[n:]
        tot = sum(rs)
        if tot > f.N:
            continue
        ff, gg = f, g
        coeff = CScalar(1)
        for i in range(n):
            ff = d(d(ff, left_a[i], r[i]), left_b[i], s[i])
            gg = d(d(gg, left_b[i], r[i]), left_a[i], s[i])
            coeff = coeff * (ca ** r[i]) * (cb ** s[i]) * Fraction(1, factorial(r[i]) * factorial(s[i]))
        if ff and gg:
            acc = acc + shift_lam(pointwise(ff, gg), tot, coeff)
    return acc


def std_star(f, g):
    n = f.dim
    q = list(range(n))
    p = [n + i for i in range(n)]
    # exp(-i lam d_p (x) d_q)
    return two_channel_sum(f, g, p, q, CScalar(0, -1), CScalar(0))


def kappa_star(f, g, k):
    n = f.dim
    q = list(range(n))
    p = [n + i for i in range(n)]
    # exp(i k lam d_q (x) d_p + i (k - 1) lam d_p (x) d_q)
    return two_channel_sum(f, g, q, p, CScalar(0, k), CScalar(0, k - 1))


def wick_star(f, g):
    n = f.dim
    z = list(range(n))
    zb = [n + i for i in range(n)]
    return two_channel_sum(f, g, z, zb, CScalar(2), CScalar(0))


def weyl_star_binomial(f, g):
    """One degree of freedom: ``sum_r (i lam/2)^r / r! sum_k C(r,k) (-1)^k
    d_q^(r-k) d_p^k f  d_p^(r-k) d_q^k g``."""
    assert f.dim == 1
    acc = StarElem.zero(1, f.N)
    for r in range(f.N + 1):
        for k in range(r + 1):
            ff = d(d(f, 0, r - k), 1, k)
            gg = d(d(g, 1, r - k), 0, k)
            c = CScalar(0, Fraction(1, 2)) ** r * Fraction(comb(r, k) * (-1) ** k, factorial(r))
            if ff and gg:
                acc = acc + shift_lam(pointwise(ff, gg), r, c)
    return acc


def bubble_sort_pbw(lie, word, N):
    """Normal order a word by swapping the first adjacent descent until none is left."""
    todo = {(tuple(word), 0): CScalar(1)}
    done = {}
    while todo:
        (w, k), c = todo.popitem()
        pos = next((t for t in range(len(w) - 1) if w[t] > w[t + 1]), None)
        if pos is None:
            done[(w, k)] = done.get((w, k), ZERO) + c
            continue
        i, j = w[pos], w[pos + 1]
        sw = w[:pos] + (j, i) + w[pos + 2:]
        todo[(sw, k)] = todo.get((sw, k), ZERO) + c
        if k + 1 <= N:
            for m, v in lie.bracket(i, j).items():
                key = (w[:pos] + (m,) + w[pos + 2:], k + 1)
                todo[key] = todo.get(key, ZERO) + c * v
    return {key: v for key, v in done.items() if v}
