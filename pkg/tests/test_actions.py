from fractions import Fraction

from deformq.actions import (CrossedModule, CrossedProduct, MomentumMap, adjoint_action, enumerate_momentum_maps,
                             h_invariant_star_check, inner_action, inner_actions_trivial_on_commutative,
                             linear_group_action, trivial_action, translation_action, verify_action)
from deformq.algebra import StarAlgebra, function_values_algebra, matrix_algebra, matrix_elem
from deformq.fixtures import crossed_fixture, rotation_maps, weyl_rotation_action, weyl_sample
from deformq.hopf import cyclic_group, group_algebra, symmetric_group3
from deformq.phasepoly import LinearMap, StarElem
from deformq.randgen import rand_elem
from deformq.starproducts import kappa, standard, weyl


def _z2():
    cay, inv = cyclic_group(2)
    return cay, group_algebra(cay, inv), function_values_algebra(["e", "a"])


def test_actions_satisfy_axioms():
    cay, H, F = _z2()
    assert verify_action(translation_action(H, F, cay)).ok
    assert verify_action(adjoint_action(group_algebra(*symmetric_group3()))).ok
    assert verify_action(weyl_rotation_action(4)).ok


def test_translation_crossed_product_example():
    cay, H, F = _z2()
    cp = CrossedProduct(translation_action(H, F, cay))
    lhs = cp.mul(cp.elem(F.one(), 1), cp.elem(F.e(0), 0))
    assert lhs == cp.elem(F.e(1), 1)
    assert cp.verify().ok


def test_crossed_fixtures_verify():
    assert crossed_fixture("fz2-z2").verify().ok
    assert crossed_fixture("weyl-z4", 4).verify().ok


def test_weyl_invariant_under_rotation_but_not_std(rng):
    cay, inv = cyclic_group(4)
    H = group_algebra(cay, inv)
    pairs = [(rand_elem(rng, 1, 4, 3), rand_elem(rng, 1, 4, 3)) for _ in range(5)]
    W = StarAlgebra(weyl(1), 4, weyl_sample(1, 4))
    act = linear_group_action(H, W, rotation_maps(1))
    assert h_invariant_star_check(act, weyl(1), pairs).ok
    S = StarAlgebra(standard(1), 4, weyl_sample(1, 4))
    assert not h_invariant_star_check(linear_group_action(H, S, rotation_maps(1)), standard(1), pairs).ok


def test_inner_action_on_matrices_is_conjugation():
    cay, H, _ = _z2()
    M = matrix_algebra(2)
    U = matrix_elem(M, [[0, 1], [1, 0]])
    J = MomentumMap(H, M, [M.one(), U])
    assert J.verify().ok
    act = inner_action(J)
    a = matrix_elem(M, [[1, 2], [3, 4]])
    assert act.act(H.e(1), a) == matrix_elem(M, [[4, 3], [2, 1]])
    assert verify_action(act).ok


def test_commutative_inner_actions_trivial():
    cay, H, F = _z2()
    rep = inner_actions_trivial_on_commutative(H, F)
    assert rep.ok and rep.checked == 4
    H4 = group_algebra(*cyclic_group(4))
    F4 = function_values_algebra(list("0123"))
    # momentum maps with values in {-1,0,1}: pointwise sign characters, 2^4 of them
    assert len(enumerate_momentum_maps(H4, F4)) == 16


def test_crossed_module_inner_product():
    cay, H, F = _z2()
    M = CrossedModule(translation_action(H, F, cay), 2)
    B = M.basis()
    assert all(M.cp.star(M.inner(x, y)) == M.inner(y, x) for x in B for y in B)
    assert M.degenerate_subspace() == []
