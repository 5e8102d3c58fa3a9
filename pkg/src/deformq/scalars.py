"""Exact scalars and truncated formal power series in the deformation parameter.

``Rat`` is :class:`fractions.Fraction`.  :class:`CScalar` is the Gaussian
extension Q(i).  :class:`Series` is a power series in ``lam`` truncated after a
fixed order ``N``; the coefficient domain is anything with ring arithmetic
(``CScalar``, ``Fraction``, polynomials, ...).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction

#: order of the zero series
INF = math.inf


class OrderMismatch(ValueError):
    """Two series with different truncation orders were combined."""


class SingularLeadingTerm(ZeroDivisionError):
    """A series whose constant term is not invertible was inverted."""


def as_rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class CScalar:
    """Element ``re + i*im`` of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else as_rat(re)
        self.im = im if isinstance(im, Fraction) else as_rat(im)

    @classmethod
    def coerce(cls, x) -> "CScalar":
        if isinstance(x, CScalar):
            return x
        return cls(x, 0)

    def __add__(self, other):
        if isinstance(other, CScalar):
            return CScalar(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return CScalar(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return CScalar(-self.re, -self.im)

    def __sub__(self, other):
        if isinstance(other, CScalar):
            return CScalar(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction)):
            return CScalar(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, CScalar):
            a, b, c, d = self.re, self.im, other.re, other.im
            if not b:
                return CScalar(a * c, a * d)
            if not d:
                return CScalar(a * c, b * c)
            return CScalar(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)):
            return CScalar(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def norm2(self) -> Fraction:
        """``z * conj(z)`` as a rational."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "CScalar":
        n = self.norm2()
        if not n:
            raise ZeroDivisionError("CScalar division by zero")
        return CScalar(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CScalar(self.re / other, self.im / other)
        return self * CScalar.coerce(other).inverse()

    def __rtruediv__(self, other):
        return CScalar.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "CScalar":
        return CScalar(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, CScalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def is_real(self) -> bool:
        return not self.im

    def __repr__(self):
        return f"CScalar({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        return f"({self.re}+{self.im}*i)"


ZERO = CScalar(0, 0)
ONE = CScalar(1, 0)
I = CScalar(0, 1)


def cs(x) -> CScalar:
    """Coerce ints, rationals, ``"a/b"`` strings and ``(re, im)`` pairs."""
    if isinstance(x, CScalar):
        return x
    if isinstance(x, tuple):
        return CScalar(x[0], x[1])
    return CScalar(x, 0)


def _zero_like(c):
    return c * 0


class Series:
    """Truncated power series ``c_0 + c_1 lam + ... + c_N lam^N``.

    Coefficients beyond ``N`` are never read or produced.
    """

    __slots__ = ("coeffs", "trunc_order")

    def __init__(self, coeffs: Sequence, trunc_order: int | None = None, zero=None):
        coeffs = list(coeffs)
        if trunc_order is None:
            trunc_order = len(coeffs) - 1
        if trunc_order < 0:
            raise ValueError("truncation order must be non-negative")
        if zero is None:
            if not coeffs:
                raise ValueError("empty series needs an explicit zero")
            zero = _zero_like(coeffs[0])
        coeffs = coeffs[: trunc_order + 1]
        coeffs += [zero] * (trunc_order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.trunc_order = trunc_order

    @classmethod
    def constant(cls, c, trunc_order: int) -> "Series":
        return cls([c], trunc_order)

    @classmethod
    def lam(cls, trunc_order: int, one=ONE) -> "Series":
        """The formal parameter itself (zero if ``trunc_order == 0``)."""
        zero = _zero_like(one)
        return cls([zero, one], trunc_order, zero=zero)

    @property
    def N(self) -> int:
        return self.trunc_order

    def _check(self, other: "Series"):
        if self.trunc_order != other.trunc_order:
            raise OrderMismatch(f"truncation orders {self.trunc_order} and {other.trunc_order}")

    def _lift(self, other) -> "Series":
        if isinstance(other, Series):
            self._check(other)
            return other
        return Series([other], self.trunc_order, zero=_zero_like(self.coeffs[0]))

    def __add__(self, other):
        other = self._lift(other)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)], self.trunc_order)

    __radd__ = __add__

    def __neg__(self):
        return Series([-a for a in self.coeffs], self.trunc_order)

    def __sub__(self, other):
        other = self._lift(other)
        return Series([a - b for a, b in zip(self.coeffs, other.coeffs)], self.trunc_order)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Series):
            return Series([a * other for a in self.coeffs], self.trunc_order)
        return series_mul(self, other)

    def __rmul__(self, other):
        return Series([other * a for a in self.coeffs], self.trunc_order)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.trunc_order == other.trunc_order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def order(self):
        return series_order(self)

    def map(self, fn) -> "Series":
        return Series([fn(c) for c in self.coeffs], self.trunc_order)

    def __repr__(self):
        terms = [f"({c})*lam^{k}" for k, c in enumerate(self.coeffs) if c]
        return "Series(" + (" + ".join(terms) or "0") + f"; N={self.trunc_order})"


def series_mul(a: Series, b: Series) -> Series:
    """Cauchy product, truncated at the shared order."""
    a._check(b)
    N = a.trunc_order
    out = []
    for n in range(N + 1):
        acc = a.coeffs[0] * b.coeffs[n]
        for j in range(1, n + 1):
            acc = acc + a.coeffs[j] * b.coeffs[n - j]
        out.append(acc)
    return Series(out, N)


def series_order(a: Series):
    """Index of the first nonzero coefficient, ``INF`` for the zero series."""
    for k, c in enumerate(a.coeffs):
        if c:
            return k
    return INF


def lambda_metric(a: Series, b: Series) -> Fraction:
    """Ultrametric ``2^(-o(a-b))``; zero when ``a == b``."""
    o = series_order(a - b)
    if o == INF:
        return Fraction(0)
    return Fraction(1, 2 ** o)


def series_invert(a: Series) -> Series:
    c0 = a.coeffs[0]
    if not c0:
        raise SingularLeadingTerm("constant term vanishes; series has no inverse")
    try:
        inv0 = c0.inverse() if hasattr(c0, "inverse") else 1 / c0
    except ZeroDivisionError as exc:
        raise SingularLeadingTerm(str(exc)) from exc
    N = a.trunc_order
    out = [inv0]
    for n in range(1, N + 1):
        acc = a.coeffs[1] * out[n - 1]
        for j in range(2, n + 1):
            acc = acc + a.coeffs[j] * out[n - j]
        out.append(-(inv0 * acc))
    return Series(out, N)


def binomial_coefficient(alpha: Fraction, k: int) -> Fraction:
    """Generalised binomial ``alpha choose k`` for rational ``alpha``."""
    out = Fraction(1)
    for j in range(k):
        out = out * (alpha - j) / (j + 1)
    return out


def hermitian_sum_of_squares(zs: Iterable[CScalar]) -> Fraction:
    """``sum z_k conj(z_k)``; non-negative in an ordered field."""
    total = Fraction(0)
    for z in zs:
        total += z.norm2()
    return total
