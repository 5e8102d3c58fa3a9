from fractions import Fraction
from itertools import product
from math import factorial

import pytest

from deformq.fedosov import (Fedosov, FiberElem, LambdaDivisionError, SymplecticData, delta, delta_inv, delta_star,
                             i_over_lambda, omega_form, sigma, sigma_fiber)
from deformq.phasepoly import LinearMap, StarElem, apply_linear, poisson
from deformq.randgen import rand_elem, rand_fiber, rand_symplectic
from deformq.scalars import I
from deformq.starproducts import star, weyl

OMEGA1 = ((0, 1), (-1, 0))


def test_lambda_is_minus_inverse_omega():
    data = SymplecticData.canonical(2)
    assert data.omega_times_lambda() == tuple(tuple(Fraction(-int(i == j)) for j in range(4)) for i in range(4))
    assert data.Lambda[0][2] == 1


def test_delta_squares_vanish(rng):
    for _ in range(30):
        a = rand_fiber(rng, 2)
        assert not delta(delta(a))
        assert not delta_star(delta_star(a))


def test_poincare_identity(rng):
    for _ in range(50):
        a = rand_fiber(rng, 1 + rng.randrange(2))
        assert delta(delta_inv(a)) + delta_inv(delta(a)) + sigma_fiber(a) == a


def test_delta_example():
    # delta(y^1) = dx^1 and delta^-1(dx^1) = y^1
    y = FiberElem.monomial(1, y=(1, 0))
    dx = FiberElem.monomial(1, form=(0,))
    assert delta(y) == dx
    assert delta_inv(dx) == y


def test_taylor_series_for_flat_zero_omega(rng):
    fed = Fedosov(SymplecticData.canonical(1), 4)
    for _ in range(10):
        f = rand_elem(rng, 1, 4, 3)
        # oracle: sum_a y^a / a! d^a f
        want = FiberElem.zero(1)
        for (e, k), c in f.terms.items():
            for a in product(*(range(x + 1) for x in e)):
                coeff = c
                for x, t in zip(e, a):
                    coeff = coeff * Fraction(factorial(x), factorial(x - t) * factorial(t))
                rest = tuple(x - t for x, t in zip(e, a))
                want = want + FiberElem.monomial(1, rest, a, (), k, coeff)
        assert fed.tau(f) == want.truncate(fed.tau_cap)


def test_r_solves_fedosov_equation():
    fed = Fedosov(SymplecticData.canonical(1, [(1, OMEGA1)]), 3)
    r = fed.r
    assert r.min_Deg() >= 3
    assert not delta_inv(r)
    assert not fed.r_residual()
    assert r.form_degrees() == {1}
    # lowest term: delta^-1 of lam dq^dp
    assert r.Deg_part(3) == delta_inv(omega_form(fed.data))


def test_flat_zero_omega_gives_weyl(rng):
    for n in (1, 2):
        fed = Fedosov(SymplecticData.canonical(n), 4)
        for _ in range(10):
            f, g = rand_elem(rng, n, 4), rand_elem(rng, n, 4)
            assert fed.star(f, g) == star(weyl(n), f, g)


def test_curved_class_product_is_star_product(rng):
    fed = Fedosov(SymplecticData.canonical(1, [(1, OMEGA1)]), 4)
    q, p = StarElem.var(0, 1, 4), StarElem.var(1, 1, 4)
    assert fed.star(q, p) - fed.star(p, q) != StarElem.lam(1, 4).scale(I)
    for _ in range(5):
        f, g, h = (rand_elem(rng, 1, 4, 3) for _ in range(3))
        assert fed.star(fed.star(f, g), h) == fed.star(f, fed.star(g, h))
        assert sigma(fed.tau(f), 4) == f
        f0, g0 = f.lam_part(0), g.lam_part(0)
        c = fed.star(f0, g0)
        assert c.lam_part(0) == f0 * g0
        assert (c - fed.star(g0, f0)).lam_part(1) == poisson(f0, g0).scale(I)
        # real Omega gives a Hermitian product
        assert fed.star(f, g).conj() == fed.star(g.conj(), f.conj())


def test_invariance_under_symplectic_maps(rng):
    fed = Fedosov(SymplecticData.canonical(1, [(1, OMEGA1)]), 4)
    for _ in range(4):
        g = LinearMap(rand_symplectic(rng, 1))
        f, h = rand_elem(rng, 1, 4, 3), rand_elem(rng, 1, 4, 3)
        assert apply_linear(g, fed.star(f, h)) == fed.star(apply_linear(g, f), apply_linear(g, h))


def test_fedosov_derivation_squares_to_zero(rng):
    fed = Fedosov(SymplecticData.canonical(1, [(1, OMEGA1)]), 3)
    cap = fed.r_cap
    for _ in range(5):
        a = rand_fiber(rng, 1)
        assert not fed.fedosov_D(fed.fedosov_D(a, cap), cap).truncate(cap - 3)
        f = rand_elem(rng, 1, 3)
        assert not fed.fedosov_D(fed.tau(f), fed.tau_cap).truncate(fed.tau_cap - 1)


def test_lambda_division_guard():
    with pytest.raises(LambdaDivisionError):
        i_over_lambda(FiberElem.monomial(1, y=(1, 0)))


def test_bad_data_rejected():
    with pytest.raises(ValueError):
        SymplecticData(1, ((0, 1), (1, 0)))
    with pytest.raises(ValueError):
        SymplecticData.canonical(1, [(0, OMEGA1)])
