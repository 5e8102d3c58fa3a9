from fractions import Fraction
from itertools import product

import pytest

from deformq import linalg
from deformq.morita import (ColumnModule, InnerProdSpace, MatrixStarAlg, NotIdempotent, NotPositive, RowModule,
                            adjoint, cauchy_schwarz_gap, deformed_projector, degenerate_subspace,
                            induced_inner_product, is_completely_positive, is_full_idempotent, projector_fixture,
                            theta)
from deformq.phasepoly import StarElem
from deformq.randgen import rand_cscalar
from deformq.scalars import ONE, ZERO, CScalar, cs
from deformq.starproducts import kappa, standard, weyl

GRAM = ((2, (1, 1), 0), ((1, -1), 3, 1), (0, 1, 1))


def test_cauchy_schwarz_examples():
    S = InnerProdSpace.standard(3)
    v = [1, (2, 1), 0]
    assert cauchy_schwarz_gap(S, v, v) == 0
    assert cauchy_schwarz_gap(S, [1, 0, 0], [0, 1, 0]) == 1


def test_cauchy_schwarz_nonstandard_gram(rng):
    S = InnerProdSpace(GRAM)
    assert S.is_positive()
    for _ in range(50):
        a, b = [rand_cscalar(rng) for _ in range(3)], [rand_cscalar(rng) for _ in range(3)]
        assert cauchy_schwarz_gap(S, a, b) >= 0


def test_indefinite_gram_rejected():
    with pytest.raises(NotPositive):
        cauchy_schwarz_gap(InnerProdSpace([[1, 0], [0, -1]]), [1, 0], [0, 1])


def test_adjoint_properties(rng):
    S, T = InnerProdSpace(GRAM), InnerProdSpace.standard(2)
    A = tuple(tuple(rand_cscalar(rng) for _ in range(3)) for _ in range(2))
    As = adjoint(A, S, T)
    for i in range(3):
        for j in range(2):
            phi = [ONE if k == i else ZERO for k in range(3)]
            psi = [ONE if k == j else ZERO for k in range(2)]
            assert T.inner(linalg.matvec(A, phi), psi) == S.inner(phi, linalg.matvec(As, psi))
    assert adjoint(As, T, S) == linalg.mat(A)
    std = InnerProdSpace.standard(3)
    B = tuple(tuple(rand_cscalar(rng) for _ in range(3)) for _ in range(3))
    assert adjoint(B, std, std) == linalg.conj_transpose(B)
    assert adjoint(linalg.identity(3), S, S) == linalg.identity(3)


def test_rank_one_calculus(rng):
    S = InnerProdSpace(GRAM)

    def vec():
        return [rand_cscalar(rng) for _ in range(3)]

    for _ in range(10):
        t1, t2 = theta(vec(), vec(), S), theta(vec(), vec(), S)
        assert linalg.matmul(t1.matrix(), t2.matrix()) == t1.compose(t2).matrix()
        assert adjoint(t1.matrix(), S, S) == t1.adjoint().matrix()
        chi = vec()
        assert t1(chi) == linalg.matvec(t1.matrix(), [cs(x) for x in chi])


def test_induced_inner_product_scalars():
    E, F = RowModule(1, 1), ColumnModule(1, 1)
    x1, x2, y1, y2 = CScalar(1, 2), CScalar(3), CScalar(0, 1), CScalar(2, -1)
    got = induced_inner_product([[x1]], [[y1]], [[x2]], [[y2]], E, F)
    assert got == ((x1.conj() * x2 * y1.conj() * y2,),)
    assert induced_inner_product([[0]], [[y1]], [[x2]], [[y2]], E, F) == ((ZERO,),)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_rows_over_matrices_collapse_to_scalars(n):
    # E = row vectors over M_n, F = column vectors: E (x)_{M_n} F = C
    assert len(degenerate_subspace(RowModule(1, n), ColumnModule(n, 1))) == n * n - 1


def test_complete_positivity():
    F = ColumnModule(2, 2)
    assert is_completely_positive(F.inner, F.basis())


def test_full_idempotents():
    assert is_full_idempotent([[1, 0], [0, 1]])
    assert not is_full_idempotent([[0, 0], [0, 0]])
    assert is_full_idempotent([[1, 0], [0, 0]])
    assert is_full_idempotent([[Fraction(1, 2), Fraction(1, 2)], [Fraction(1, 2), Fraction(1, 2)]])
    with pytest.raises(NotIdempotent):
        is_full_idempotent([[1, 1], [0, 2]])


def test_full_idempotent_by_brute_span():
    # oracle: the span of E_ab P E_cd is spanned by P_bc E_ad
    for diag in product([0, 1], repeat=3):
        P = [[diag[i] if i == j else 0 for j in range(3)] for i in range(3)]
        vecs = []
        for a, b, c, d in product(range(3), repeat=4):
            m = [[ZERO] * 3 for _ in range(3)]
            m[a][d] = cs(P[b][c])
            vecs.append(tuple(x for row in m for x in row))
        assert is_full_idempotent(P) == (linalg.rank(vecs) == 9)


def test_constant_projector_unchanged():
    N = 4
    P0 = ((StarElem.const(1, 1, N), StarElem.zero(1, N)), (StarElem.zero(1, N), StarElem.zero(1, N)))
    assert deformed_projector(P0, weyl(1), N) == P0


@pytest.mark.parametrize("spec", [weyl(1), standard(1), kappa(Fraction(1, 3), 1)])
def test_deformed_projector_is_idempotent(spec):
    N = 6
    P0 = projector_fixture(N)
    alg = MatrixStarAlg(2, spec, N)
    P = deformed_projector(P0, spec, N)
    assert alg.mul(P, P) == P
    assert all(x.lam_part(0) == y for r, s in zip(P, P0) for x, y in zip(r, s))


def test_fixture_is_not_hermitian():
    N = 2
    P0 = projector_fixture(N)
    assert MatrixStarAlg(2, weyl(1), N).star(P0) != P0


def test_not_pointwise_idempotent_rejected():
    N = 2
    q = StarElem.var(0, 1, N)
    z = StarElem.zero(1, N)
    with pytest.raises(NotIdempotent):
        deformed_projector(((q, z), (z, z)), weyl(1), N)
