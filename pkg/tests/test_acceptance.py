"""Acceptance criteria.

Every check is exact (tolerance 0: rational arithmetic, equality of
truncated series).  Each test prints one line ``[PASS]`` / ``[FAIL]`` and the
lines are repeated in the terminal summary.  Run alone with::

    pytest tests/test_acceptance.py -v -s
    python3 tests/test_acceptance.py
"""

import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import conftest  # noqa: E402
from deformq import suites  # noqa: E402

TOL = "tolerance: exact (0)"


def _report(tag, title, result, checks, limit=None):
    bad = [c for c in checks if not c.ok]
    ok = not bad and (limit is None or result.seconds < limit)
    timing = f"{result.seconds:.2f}s" + (f" (limit {limit}s)" if limit else "")
    cases = sum(c.checked for c in checks)
    line = f"[{'PASS' if ok else 'FAIL'}] {tag} {title}: {len(checks)} checks, {cases} cases, {TOL}, {timing}"
    if bad:
        line += f"; first failure: {bad[0].name}: {repr(bad[0].counterexample)[:200]}"
    print(line)
    conftest.ACCEPTANCE_LINES.append(line)
    return ok, bad


def _run(tag, title, result, limit=None, select=None):
    checks = [c for c in result.checks if select is None or select(c)]
    assert checks, "no checks selected"
    ok, bad = _report(tag, title, result, checks, limit)
    assert not bad, f"{bad[0].name}: {bad[0].counterexample!r}"
    if limit is not None:
        assert result.seconds < limit, f"took {result.seconds:.1f}s, limit {limit}s"


def test_c01_star_axioms():
    _run("C1", "std/weyl/kappa(1/3)/wick/tkappa(-1) axioms, 100 triples, n<=2, deg<=4, N=8",
         suites.star_axioms(trials=100, N=8, max_deg=4), limit=60)


def test_c02_heisenberg_relations():
    _run("C2", "[q,p] = i lam (std, weyl, 5 kappas), [z,zb]_Wick = 2 lam", suites.heisenberg_relations())


def test_c03_neumaier():
    _run("C3", "Neumaier group law, conjugation, star via equivalence (50 samples)",
         suites.neumaier_calculus(trials=50))


def test_c04_conjugation():
    _run("C4", "conjugation laws, Hermiticity, tkappa(0) = Weyl", suites.conjugation_laws(trials=50))


def test_c05_gutt():
    _run("C5", "Gutt associativity (deg<=3, N=6), generator commutators, abelian, PBW (100 words)",
         suites.gutt_suite(words=100, N=6))


def test_c06_fedosov():
    t0 = time.perf_counter()
    res = suites.fedosov_suite(trials=50, N=6)
    res.checks.extend(suites.poincare_suite(trials=50).checks)
    res.seconds = time.perf_counter() - t0
    _run("C6", "Fedosov Omega=0 = Weyl (n=1,2; 50 pairs, N=6), Poincare, sigma o tau, D^2 = 0",
         res, limit=120)


def test_c07_hopf():
    _run("C7", "Hopf axioms on C[Z2], C[Z4], C[S3], F(Z2), U(heis) D=3; q=2 fails cocomm. and S^2 = id",
         suites.hopf_suite())


def test_c08_convolution():
    _run("C8", "convolution inverses, unitarity, hat map, characters of C[Z4]",
         suites.convolution_suite(trials=50))


def test_c09_crossed_products():
    _run("C9", "crossed products F(Z2)xC[Z2], Weyl(n=1)xC[Z4], C x| H = H, <x,y>* = <y,x>",
         suites.crossed_suite())


def test_c10_obstructions():
    _run("C10", "inner actions on commutative algebras trivial, Gutt order gap", suites.obstruction_suite())


def test_c11_invariance():
    _run("C11", "Weyl invariant under 20 symplectic maps, scaling detected, Wick under z -> iz",
         suites.invariance_suite(maps=20))


_MORITA = {}


def _morita():
    if "r" not in _MORITA:
        _MORITA["r"] = suites.morita_suite(trials=200, N=6)
    return _MORITA["r"]


def test_c12_morita():
    _run("C12a", "Cauchy-Schwarz (200 pairs), Theta law, P*P = P at N=6, full idempotents in M3",
         _morita(), select=lambda c: "P* = P" not in c.name)


def test_c12_projector_hermitian():
    # Expected to fail: the prescribed P0 is not Hermitian, so no deformation of it can be.
    _run("C12b", "deformed projector P* = P at N=6", _morita(), select=lambda c: "P* = P" in c.name)


def test_c13_ultrametric():
    _run("C13", "ultrametric (max form) on 200 series triples", suites.ultrametric_suite(trials=200))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
