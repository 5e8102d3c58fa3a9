"""Named fixtures and JSON fixture loaders.

Hopf fixture file::

    {"labels": [...], "unit": {"0": "1"},
     "mult": [[i, j, k, "c"], ...],
     "comult": [[i, j, k, "c"], ...],        # Delta e_i contains c e_j (x) e_k
     "counit": ["c0", "c1", ...],
     "antipode": [[i, j, "c"], ...],         # S e_i contains c e_j
     "star": [[i, j, "re", "im"], ...]}      # optional

Lie fixture file: ``{"dim": d, "brackets": [[i, j, k, "c"], ...]}``.

Fedosov fixture file: ``{"n": n, "omega": [[...]], "Omega": [[k, [[...]]], ...]}``.

Action fixture file: ``{"group": "z4", "maps": [[[...]], ...]}``, one real
``2n x 2n`` matrix per group element in Cayley-table order.
"""

from __future__ import annotations

import json
from pathlib import Path

from . import lie as lie_mod
from .actions import CrossedProduct, linear_group_action, translation_action
from .algebra import StarAlgebra, function_values_algebra
from .fedosov import SymplecticData
from .hopf import (HopfAlgebra, cyclic_group, function_algebra, group_algebra, q_deformed,
                   symmetric_group3, truncated_enveloping)
from .phasepoly import LinearMap, StarElem
from .scalars import CScalar, as_rat, cs
from .starproducts import weyl


class FixtureError(ValueError):
    pass


def _group(name: str):
    if name.startswith("z") and name[1:].isdigit():
        return cyclic_group(int(name[1:]))
    if name == "s3":
        return symmetric_group3()
    raise FixtureError(f"unknown group {name!r}")


HOPF_NAMES = ("z2", "z4", "s3", "fz2", "fs3", "heis", "q2")


def hopf_fixture(name: str) -> HopfAlgebra:
    if name in ("z2", "z4", "s3"):
        return group_algebra(*_group(name))
    if name in ("fz2", "fs3"):
        return function_algebra(*_group(name[1:]))
    if name == "heis":
        return truncated_enveloping(lie_mod.heisenberg(), 3)
    if name == "q2":
        return q_deformed(2, 3)
    path = Path(name)
    if path.exists():
        return load_hopf(path)
    raise FixtureError(f"unknown Hopf fixture {name!r}; built-ins: {', '.join(HOPF_NAMES)}")


def _read(path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FixtureError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def load_hopf(path) -> HopfAlgebra:
    d = _read(path)
    try:
        labels = d["labels"]
        n = len(labels)
        mult: dict = {}
        for i, j, k, c in d["mult"]:
            mult.setdefault((i, j), {})[k] = as_rat(c)
        unit = {int(k): as_rat(v) for k, v in d["unit"].items()}
        comult = [[] for _ in range(n)]
        for i, j, k, c in d["comult"]:
            comult[i].append((j, k, as_rat(c)))
        counit = [as_rat(c) for c in d["counit"]]
        antipode = [{} for _ in range(n)]
        for i, j, c in d["antipode"]:
            antipode[i][j] = as_rat(c)
        star = None
        if "star" in d:
            star = [{} for _ in range(n)]
            for i, j, re, im in d["star"]:
                star[i][j] = CScalar(as_rat(re), as_rat(im))
        partial = bool(d.get("partial", False))
    except (KeyError, TypeError, ValueError) as exc:
        raise FixtureError(f"{path}: malformed Hopf fixture ({exc})") from None
    return HopfAlgebra(labels, mult, unit, comult, counit, antipode, star, partial, d.get("name", str(path)))


LIE_NAMES = ("heisenberg", "solvable3", "sl2", "abelian3")


def lie_fixture(name: str) -> lie_mod.LieAlgebra:
    if name == "heisenberg":
        return lie_mod.heisenberg()
    if name == "solvable3":
        return lie_mod.solvable3()
    if name == "sl2":
        return lie_mod.sl2()
    if name.startswith("abelian"):
        return lie_mod.abelian(int(name[7:] or 3))
    path = Path(name)
    if path.exists():
        d = _read(path)
        return lie_mod.LieAlgebra.from_table(d["dim"], [tuple(t) for t in d["brackets"]], str(path))
    raise FixtureError(f"unknown Lie fixture {name!r}; built-ins: {', '.join(LIE_NAMES)}")


def load_symplectic(path) -> SymplecticData:
    d = _read(path)
    return SymplecticData(d["n"], tuple(map(tuple, d["omega"])),
                          tuple((k, tuple(map(tuple, m))) for k, m in d.get("Omega", [])))


def rotation_maps(n: int = 1) -> list:
    """``(q, p) -> (p, -q)`` and its powers, indexed like ``cyclic_group(4)``."""
    m = 2 * n
    R = [[0] * m for _ in range(m)]
    for k in range(n):
        R[k][n + k] = 1
        R[n + k][k] = -1
    ident = LinearMap([[1 if i == j else 0 for j in range(m)] for i in range(m)])
    maps = [ident]
    for _ in range(3):
        maps.append(LinearMap(R).compose(maps[-1]))
    return maps


CROSSED_NAMES = ("fz2-z2", "weyl-z4")


def crossed_fixture(name: str, N: int = 4) -> CrossedProduct:
    if name == "fz2-z2":
        cay, inv = cyclic_group(2)
        H = group_algebra(cay, inv)
        F = function_values_algebra(["e", "a"])
        return CrossedProduct(translation_action(H, F, cay))
    if name == "weyl-z4":
        return CrossedProduct(weyl_rotation_action(N))
    path = Path(name)
    if path.exists():
        d = _read(path)
        cay, inv = _group(d["group"])
        H = group_algebra(cay, inv)
        maps = [LinearMap(m) for m in d["maps"]]
        n = len(d["maps"][0]) // 2
        W = StarAlgebra(weyl(n), N, weyl_sample(n, N))
        return CrossedProduct(linear_group_action(H, W, maps))
    raise FixtureError(f"unknown crossed-product fixture {name!r}; built-ins: {', '.join(CROSSED_NAMES)}")


def weyl_sample(n: int, N: int) -> list:
    """``1``, the coordinates and ``q1 p1``: a small sample closed enough for basis checks."""
    out = [StarElem.const(1, n, N)]
    out += [StarElem.var(k, n, N) for k in range(2 * n)]
    out.append(StarElem.var(0, n, N) * StarElem.var(n, n, N))
    return out


def weyl_rotation_action(N: int = 4):
    cay, inv = cyclic_group(4)
    H = group_algebra(cay, inv)
    W = StarAlgebra(weyl(1), N, weyl_sample(1, N))
    return linear_group_action(H, W, rotation_maps(1))
