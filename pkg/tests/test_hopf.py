from fractions import Fraction
from itertools import product

import pytest

from deformq.actions import trivial_action, translation_action
from deformq.algebra import DegreeOverflow, function_values_algebra, matrix_algebra, scalar_algebra
from deformq.hopf import (ConvMap, NotInGL, char_automorphism, characters_of, conv_inverse, conv_unit, convolution,
                          cyclic_group, group_algebra, hat_map, is_GL_element, q_deformed, symmetric_group3,
                          truncated_enveloping)
from deformq.fixtures import hopf_fixture
from deformq.lie import heisenberg
from deformq.scalars import I, ONE, CScalar


@pytest.mark.parametrize("name", ["z2", "z4", "s3", "fz2", "fs3", "heis", "q2"])
def test_fixture_axioms(name):
    assert hopf_fixture(name).verify() == []


def test_matrix_algebra_is_associative():
    assert matrix_algebra(2).verify() == []


def test_group_algebra_structure():
    H = group_algebra(*cyclic_group(3))
    g = H.e(1)
    assert H.antipode(g) == H.e(2)
    assert H.star(g) == H.e(2)
    assert H.counit(g) == ONE
    assert H.is_cocommutative() and H.antipode_involutive()


def test_s3_is_noncommutative():
    H = group_algebra(*symmetric_group3())
    assert not H.is_commutative()


def test_enveloping_dimension_and_primitive():
    H = truncated_enveloping(heisenberg(), 3)
    assert H.dim == 20
    x = H.e(1)
    d = H.coproduct(x)
    one = next(iter(H.one().vec))
    assert d == {(1, one): ONE, (one, 1): ONE}
    assert H.antipode(x) == -x


def test_q_deformed_relations():
    q = Fraction(2)
    H = q_deformed(q, 3)
    X = H.e("g^0X^1")
    g = H.e("g^1X^0")
    assert H.mul(X, g) == H.mul(g, X).scale(q)
    assert H.antipode(H.antipode(X)) == X.scale(q)
    assert not H.is_cocommutative()
    assert not H.antipode_involutive()


def test_q_deformed_overflow_is_reported():
    H = q_deformed(2, 3)
    X = H.e("g^0X^1")
    with pytest.raises(DegreeOverflow):
        H.mul(X, X)


def _z4():
    cay, inv = cyclic_group(4)
    return cay, group_algebra(cay, inv), function_values_algebra(["0", "1", "2", "3"])


def test_conv_inverse_translation():
    cay, H, F = _z4()
    act = translation_action(H, F, cay)
    c = F.from_vector([CScalar(2), CScalar(1, 1), CScalar(-1), CScalar(0, 3)])
    a = hat_map(c, H, act)
    assert is_GL_element(a, act)
    ainv = conv_inverse(a, act)
    assert convolution(a, ainv) == conv_unit(H, F) == convolution(ainv, a)


def test_conv_inverse_rejects_non_gl():
    cay, H, F = _z4()
    act = trivial_action(H, F)
    bad = ConvMap(H, F, [F.one()] + [F.one().scale(2)] * 3)
    with pytest.raises(NotInGL):
        conv_inverse(bad, act)


def test_hat_map_needs_invertible():
    cay, inv = cyclic_group(2)
    H = group_algebra(cay, inv)
    F = function_values_algebra(["e", "a"])
    act = translation_action(H, F, cay)
    c = F.one() + F.e(0) - F.e(1)  # = 2 d_e, not invertible
    with pytest.raises(ZeroDivisionError):
        hat_map(c, H, act)
    assert is_GL_element(hat_map(F.e(0).scale(2) + F.e(1), H, act), act)


def test_characters_of_z4():
    cay, H, F = _z4()
    C = scalar_algebra()
    chars = characters_of(H, C, list(product([ONE, I, -ONE, -I], repeat=4)))
    found = sorted(tuple(str(ch.values[k].coeff(0)) for k in range(4)) for ch in chars)
    # chi_j(g^k) = i^(jk)
    expected = sorted(tuple(str(I ** (j * k)) for k in range(4)) for j in range(4))
    assert found == expected
    for chi in chars:
        phi = char_automorphism(chi)
        # Phi^chi(g) = chi(g^-1) g on group elements
        for k in range(4):
            assert phi(H.e(k)) == H.e(k).scale(chi.values[(-k) % 4].coeff(0))
