from fractions import Fraction

import pytest

from deformq.phasepoly import (COMPLEX, REAL, ChartMismatch, DimensionMismatch, LinearMap, StarElem, apply_linear,
                               coordinates, format_elem, poisson, to_complex, to_real)
from deformq.randgen import rand_elem
from deformq.scalars import I, CScalar


def test_poisson_canonical_pairs():
    (q,), (p,) = coordinates(1, 2)
    assert poisson(q, p) == StarElem.const(1, 1, 2)
    (z,), (zb,) = coordinates(1, 2, COMPLEX)
    assert poisson(z, zb) == StarElem.const(CScalar(0, -2), 1, 2, COMPLEX)


def test_poisson_chart_independent(rng):
    for _ in range(30):
        f, g = rand_elem(rng, 2, 3, lam_terms=False), rand_elem(rng, 2, 3, lam_terms=False)
        assert to_real(poisson(to_complex(f), to_complex(g))) == poisson(f, g)


def test_chart_round_trip(rng):
    for _ in range(30):
        f = rand_elem(rng, 2, 4)
        assert to_real(to_complex(f)) == f


def test_mixed_charts_rejected():
    q = StarElem.var(0, 1, 2)
    z = StarElem.var(0, 1, 2, COMPLEX)
    with pytest.raises(ChartMismatch):
        q + z
    with pytest.raises(DimensionMismatch):
        q + StarElem.var(0, 2, 2)


def test_rotation_acts_by_inverse():
    g = LinearMap([[0, 1], [-1, 0]])
    q, p = StarElem.var(0, 1, 2), StarElem.var(1, 1, 2)
    assert apply_linear(g, q) == -p
    assert apply_linear(g, p) == q
    assert g.is_symplectic()
    assert not LinearMap([[2, 0], [0, 1]]).is_symplectic()


def test_left_action_composes(rng):
    g, h = LinearMap([[1, 2], [0, 1]]), LinearMap([[1, 0], [Fraction(1, 3), 1]])
    for _ in range(10):
        f = rand_elem(rng, 1, 3)
        assert apply_linear(g.compose(h), f) == apply_linear(g, apply_linear(h, f))


def test_format():
    q, p = StarElem.var(0, 1, 2), StarElem.var(1, 1, 2)
    lam = StarElem.lam(1, 2)
    assert format_elem(q * p + lam.scale(CScalar(0, Fraction(1, 2)))) == "1*q1*p1 + (1/2*i)*lam"
    assert format_elem(StarElem.zero(1, 2)) == "0"


def test_conj_swaps_complex_blocks():
    z = StarElem.var(0, 1, 2, COMPLEX)
    zb = StarElem.var(1, 1, 2, COMPLEX)
    assert (z.scale(I)).conj() == zb.scale(-I)
