from fractions import Fraction

import pytest
from oracles import kappa_star, std_star, weyl_star_binomial, wick_star

from deformq.phasepoly import COMPLEX, ChartMismatch, DimensionMismatch, StarElem, poisson, to_complex, to_real
from deformq.randgen import rand_elem
from deformq.scalars import I, CScalar
from deformq.starproducts import (kappa, neumaier, semiclassical_defect, standard, star, star_commutator,
                                  star_via_equivalence, tkappa, weyl, wick)

N = 4


def qp(n=1, N=N):
    return StarElem.var(0, n, N), StarElem.var(n, n, N), StarElem.lam(n, N)


def test_standard_examples():
    q, p, lam = qp()
    assert star(standard(1), q, p) == q * p
    assert star(standard(1), p, q) == q * p - lam.scale(I)


def test_weyl_examples():
    q, p, lam = qp()
    assert star(weyl(1), q, p) == q * p + lam.scale(I * Fraction(1, 2))
    assert star(weyl(1), p, q) == q * p - lam.scale(I * Fraction(1, 2))


def test_kappa_endpoints():
    q, p, lam = qp()
    assert star(kappa(1, 1), q, p) == q * p + lam.scale(I)
    f, g = q * q * p, p * p * q
    assert star(kappa(0, 1), f, g) == star(standard(1), f, g)
    assert star(kappa(Fraction(1, 2), 1), f, g) == star(weyl(1), f, g)


def test_wick_examples():
    z, zb = StarElem.var(0, 1, N, COMPLEX), StarElem.var(1, 1, N, COMPLEX)
    lam = StarElem.lam(1, N, COMPLEX)
    assert star(wick(1), z, zb) == z * zb + lam.scale(2)
    assert star(wick(1), zb, z) == z * zb


@pytest.mark.parametrize("n", [1, 2])
def test_std_matches_literal_sum(rng, n):
    for _ in range(15):
        f, g = rand_elem(rng, n, 5, 3), rand_elem(rng, n, 5, 3)
        assert star(standard(n), f, g) == std_star(f, g)


@pytest.mark.parametrize("k", [Fraction(0), Fraction(1, 3), Fraction(-3, 2), Fraction(2)])
def test_kappa_matches_literal_index_sum(rng, k):
    for n in (1, 2):
        for _ in range(8):
            f, g = rand_elem(rng, n, 5, 3), rand_elem(rng, n, 5, 3)
            assert star(kappa(k, n), f, g) == kappa_star(f, g, k)


def test_weyl_matches_binomial_sum(rng):
    for _ in range(20):
        f, g = rand_elem(rng, 1, 6, 4), rand_elem(rng, 1, 6, 4)
        assert star(weyl(1), f, g) == weyl_star_binomial(f, g)


def test_wick_matches_literal_sum(rng):
    for n in (1, 2):
        for _ in range(10):
            f, g = rand_elem(rng, n, 5, 3, chart=COMPLEX), rand_elem(rng, n, 5, 3, chart=COMPLEX)
            assert star(wick(n), f, g) == wick_star(f, g)


def test_tkappa_interpolates_wick_and_antiwick(rng):
    for _ in range(10):
        f, g = rand_elem(rng, 1, 4, 3, chart=COMPLEX), rand_elem(rng, 1, 4, 3, chart=COMPLEX)
        assert star(tkappa(1, 1), f, g) == star(wick(1), f, g)


def test_tkappa_zero_is_weyl_in_complex_chart(rng):
    for _ in range(10):
        f, g = rand_elem(rng, 2, 4, 3), rand_elem(rng, 2, 4, 3)
        assert to_real(star(tkappa(0, 2), to_complex(f), to_complex(g))) == star(weyl(2), f, g)


def test_neumaier_example():
    q, p, lam = qp()
    assert neumaier(1, q * q * p) == q * q * p - (q * lam).scale(2 * I)


def test_neumaier_intertwines(rng):
    for _ in range(20):
        f, g = rand_elem(rng, 1, 5), rand_elem(rng, 1, 5)
        k = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        assert star_via_equivalence(k, f, g) == kappa_star(f, g, k)


def test_semiclassical_limit(rng):
    for spec in (standard(2), weyl(2), kappa(Fraction(2, 7), 2)):
        f, g = rand_elem(rng, 2, 4, lam_terms=False), rand_elem(rng, 2, 4, lam_terms=False)
        assert semiclassical_defect(spec, f, g).lam_order() >= 2
        assert star_commutator(spec, f, g).lam_part(1) == poisson(f, g).scale(I)


def test_weyl_has_no_even_commutator_terms(rng):
    # Weyl commutator is odd in lam
    for _ in range(10):
        f, g = rand_elem(rng, 1, 6, lam_terms=False), rand_elem(rng, 1, 6, lam_terms=False)
        c = star_commutator(weyl(1), f, g)
        assert all(k % 2 == 1 for (_, k) in c.terms)


def test_errors():
    q = StarElem.var(0, 1, 2)
    with pytest.raises(ChartMismatch):
        star(wick(1), q, q)
    with pytest.raises(DimensionMismatch):
        star(weyl(2), q, q)
    with pytest.raises(ChartMismatch):
        neumaier(1, StarElem.var(0, 1, 2, COMPLEX))
