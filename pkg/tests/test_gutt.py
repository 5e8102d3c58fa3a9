from fractions import Fraction

from oracles import bubble_sort_pbw

from deformq.gutt import GuttAlgebra, gutt_momentum_check, order_gap_witness
from deformq.lie import PBW, LieAlgebra, abelian, at_lambda_one, heisenberg, sl2, solvable3
from deformq.scalars import CScalar

import pytest


def test_lie_algebras_satisfy_jacobi():
    for lie in (heisenberg(), solvable3(), sl2(), abelian(2)):
        assert lie.check() == []


def test_jacobi_violation_rejected():
    with pytest.raises(ValueError):
        LieAlgebra.from_table(3, [(0, 1, 2, 1), (0, 2, 0, 1)])


@pytest.mark.parametrize("lie", [heisenberg(), solvable3(), sl2()])
def test_pbw_matches_bubble_sort(rng, lie):
    pbw = PBW(lie, 6)
    for _ in range(60):
        word = tuple(rng.randrange(3) for _ in range(rng.randint(0, 6)))
        assert pbw.reduce(word) == bubble_sort_pbw(lie, word, 6)


def test_pbw_heisenberg_swap():
    out = PBW(heisenberg(), 4).reduce((1, 0))
    assert out == {((0, 1), 0): CScalar(1), ((2,), 1): CScalar(-1)}
    assert at_lambda_one(out) == {(0, 1): CScalar(1), (2,): CScalar(-1)}


def test_sym_recursion_matches_word_average():
    for lie in (heisenberg(), sl2()):
        alg = GuttAlgebra(lie, 6)
        for mono in [(0, 1), (0, 0, 1), (0, 1, 2), (1, 1, 0, 2), (0, 1, 1, 2), (0, 0, 1, 1)]:
            assert alg.sym_monomial(tuple(sorted(mono))) == alg.sym_monomial_by_words(tuple(sorted(mono)))


def test_desym_inverts_sym(rng):
    alg = GuttAlgebra(sl2(), 6)
    for _ in range(20):
        f = alg.poly({tuple(sorted(rng.randrange(3) for _ in range(rng.randint(0, 4)))): rng.randint(-3, 3)
                      for _ in range(3)})
        assert alg.desym(alg.sym(f)) == f


def test_gutt_heisenberg_example():
    alg = GuttAlgebra(heisenberg(), 4)
    e1, e2, e3 = (alg.gen(i) for i in range(3))
    assert alg.star(e1, e2) == e1 * e2 + (e3 * alg.lam()).scale(Fraction(1, 2))


def test_gutt_first_order_is_linear_poisson(rng):
    alg = GuttAlgebra(solvable3(), 6)
    for _ in range(10):
        f = alg.poly({(0, 1): 1, (2,): rng.randint(1, 3)})
        g = alg.poly({(1, 1): rng.randint(1, 3), (0,): 1})
        c = alg.commutator(f, g)
        assert c.lam_order() >= 1
        assert c.lam_part(1) == alg.linear_poisson(f, g)


def test_generator_commutators_and_gap():
    alg = GuttAlgebra(sl2(), 4)
    for i in range(3):
        for j in range(3):
            assert gutt_momentum_check(alg, {i: 1}, {j: 1}).vanishes
    gap = order_gap_witness(GuttAlgebra(heisenberg(), 4), {0: 1}, {1: 1})
    assert (gap.commutator_order, gap.image_order, gap.gap) == (1, 0, 1)


def test_momentum_constant_is_lambda_not_i_lambda():
    from deformq.scalars import I
    alg = GuttAlgebra(heisenberg(), 4)
    assert gutt_momentum_check(alg, {0: 1}, {1: 1}, c=1).vanishes
    assert not gutt_momentum_check(alg, {0: 1}, {1: 1}, c=I).vanishes
