"""Explicit star products on flat phase space.

Every family is ``mu o exp(lam * B)`` for a constant bidifferential operator
``B``; see :func:`channels` for the coefficients.  With ``P = d_q (x) d_p`` and
``Z = d_z (x) d_zb``:

* standard     ``B = -i P*``
* weyl         ``B = (i/2) (P - P*)``
* kappa(k)     ``B = i (k P - (1-k) P*)``
* wick         ``B = 2 Z``
* tkappa(k)    ``B = (k+1) Z + (k-1) Z*``
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .phasepoly import (
    COMPLEX,
    REAL,
    Bidifferential,
    ChartMismatch,
    DimensionMismatch,
    LinearMap,
    StarElem,
    apply_linear,
    exp_laplacian,
    poisson,
)
from .scalars import CScalar, I, as_rat

FAMILIES = ("standard", "weyl", "kappa", "wick", "tkappa")


@dataclass(frozen=True)
class StarSpec:
    family: str
    dim: int = 1
    param: Fraction | None = field(default=None)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown star product family {self.family!r}")
        if self.family in ("kappa", "tkappa"):
            if self.param is None:
                raise ValueError(f"{self.family} needs a rational parameter")
            object.__setattr__(self, "param", as_rat(self.param))
        elif self.param is not None:
            raise ValueError(f"{self.family} takes no parameter")
        if self.dim < 1:
            raise ValueError("dimension must be at least 1")

    @property
    def chart(self) -> str:
        return COMPLEX if self.family in ("wick", "tkappa") else REAL

    def __str__(self):
        return self.family if self.param is None else f"{self.family}:{self.param}"


def standard(n: int = 1) -> StarSpec:
    return StarSpec("standard", n)


def weyl(n: int = 1) -> StarSpec:
    return StarSpec("weyl", n)


def kappa(k, n: int = 1) -> StarSpec:
    return StarSpec("kappa", n, as_rat(k))


def wick(n: int = 1) -> StarSpec:
    return StarSpec("wick", n)


def tkappa(k, n: int = 1) -> StarSpec:
    return StarSpec("tkappa", n, as_rat(k))


def channels(spec: StarSpec) -> list[tuple]:
    """``(a, b, c)`` triples: ``B = sum c d_a (x) d_b`` (``a`` acts left)."""
    n = spec.dim
    out = []
    for k in range(n):
        x, y = k, n + k
        if spec.family == "standard":
            out.append((y, x, CScalar(0, -1)))
        elif spec.family == "weyl":
            out.append((x, y, CScalar(0, Fraction(1, 2))))
            out.append((y, x, CScalar(0, Fraction(-1, 2))))
        elif spec.family == "kappa":
            kk = spec.param
            out.append((x, y, CScalar(0, kk)))
            out.append((y, x, CScalar(0, kk - 1)))
        elif spec.family == "wick":
            out.append((x, y, CScalar(2)))
        else:
            kk = spec.param
            out.append((x, y, CScalar(kk + 1)))
            out.append((y, x, CScalar(kk - 1)))
    return [c for c in out if c[2]]


@lru_cache(maxsize=None)
def _engine(spec: StarSpec) -> Bidifferential:
    return Bidifferential(channels(spec))


def _check(spec: StarSpec, *elems: StarElem):
    for f in elems:
        if f.dim != spec.dim:
            raise DimensionMismatch(f"{spec} is {spec.dim}-dimensional, element has dim {f.dim}")
        if f.chart != spec.chart:
            raise ChartMismatch(f"{spec} needs the {spec.chart} chart, element is in the {f.chart} chart")


def star(spec: StarSpec, f: StarElem, g: StarElem) -> StarElem:
    _check(spec, f, g)
    return _engine(spec)(f, g)


def star_commutator(spec: StarSpec, f: StarElem, g: StarElem) -> StarElem:
    return star(spec, f, g) - star(spec, g, f)


def _mixed_pairs(n: int):
    return [(k, n + k) for k in range(n)]


def neumaier(k, f: StarElem) -> StarElem:
    """``N_k = exp(-i k lam Delta)`` with ``Delta = sum d_q d_p``."""
    if f.chart != REAL:
        raise ChartMismatch("Neumaier operator acts in the real chart")
    k = as_rat(k)
    if not k:
        return f
    return exp_laplacian(f, _mixed_pairs(f.dim), CScalar(0, -k))


def star_via_equivalence(k, f: StarElem, g: StarElem) -> StarElem:
    """``N_k^{-1}(N_k f *_std N_k g)``."""
    spec = standard(f.dim)
    return neumaier(-as_rat(k), star(spec, neumaier(k, f), neumaier(k, g)))


def star_conj(f: StarElem) -> StarElem:
    return f.conj()


def conjugation_law_holds(k, f: StarElem, g: StarElem) -> bool:
    """``conj(f *_k g) == conj(g) *_{1-k} conj(f)``."""
    k = as_rat(k)
    n = f.dim
    lhs = star(kappa(k, n), f, g).conj()
    rhs = star(kappa(1 - k, n), g.conj(), f.conj())
    return lhs == rhs


def is_hermitian_on(spec: StarSpec, f: StarElem, g: StarElem) -> bool:
    return star(spec, f, g).conj() == star(spec, g.conj(), f.conj())


@dataclass
class InvarianceReport:
    invariant: bool
    checked: int
    violations: list

    def __bool__(self):
        return self.invariant


def invariance_check(g: LinearMap, spec: StarSpec, samples) -> InvarianceReport:
    """Test ``g.(f * h) == (g.f) * (g.h)`` on sample pairs."""
    bad = []
    count = 0
    for f, h in samples:
        count += 1
        lhs = apply_linear(g, star(spec, f, h))
        rhs = star(spec, apply_linear(g, f), apply_linear(g, h))
        if lhs != rhs:
            bad.append((f, h, lhs - rhs))
    return InvarianceReport(not bad, count, bad)


def semiclassical_defect(spec: StarSpec, f: StarElem, g: StarElem) -> StarElem:
    """``[f,g]_* - i lam {f,g}``; has λ-order >= 2."""
    lam = StarElem.lam(f.dim, f.N, f.chart)
    return star_commutator(spec, f, g) - (lam * poisson(f, g)).scale(I)
