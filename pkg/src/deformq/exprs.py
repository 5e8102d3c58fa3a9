"""Expression parsing and serialisation.

Expressions use Python operator syntax plus ``^`` for powers, e.g.
``(1/2*i)*lam + q1^2*p1``.  Names are the chart variables (``q1..qn``,
``p1..pn`` or ``z1..zn``, ``zb1..zbn``), ``lam`` and ``i``.  Division is only
allowed by constants.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from typing import Sequence

from .phasepoly import COMPLEX, REAL, ChartMismatch, StarElem, format_elem, var_names
from .scalars import I, ONE, ZERO, CScalar, cs


class ParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.msg, self.line, self.col = msg, line, col


def _caret_to_pow(text: str):
    """Replace ``^`` by ``**``; return new text and a column map back to the original."""
    out_lines, maps = [], []
    for line in text.split("\n"):
        buf, cols = [], []
        for j, ch in enumerate(line):
            if ch == "^":
                buf.append("**")
                cols.extend([j, j])
            else:
                buf.append(ch)
                cols.append(j)
        cols.append(len(line))
        out_lines.append("".join(buf))
        maps.append(cols)
    return "\n".join(out_lines), maps


class _Poly:
    """Sparse ``{(exps, lam_power): CScalar}`` used while evaluating."""

    def __init__(self, nvars: int, N: int, terms=None):
        self.nvars, self.N = nvars, N
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    def const(self):
        if not self.terms:
            return ZERO
        if set(self.terms) == {((0,) * self.nvars, 0)}:
            return self.terms[((0,) * self.nvars, 0)]
        return None

    def __add__(self, o):
        t = dict(self.terms)
        for k, v in o.terms.items():
            t[k] = t.get(k, ZERO) + v
        return _Poly(self.nvars, self.N, t)

    def __neg__(self):
        return _Poly(self.nvars, self.N, {k: -v for k, v in self.terms.items()})

    def __mul__(self, o):
        t: dict = {}
        for (e1, k1), c1 in self.terms.items():
            for (e2, k2), c2 in o.terms.items():
                if k1 + k2 <= self.N:
                    key = (tuple(a + b for a, b in zip(e1, e2)), k1 + k2)
                    t[key] = t.get(key, ZERO) + c1 * c2
        return _Poly(self.nvars, self.N, t)

    def scale(self, c):
        return _Poly(self.nvars, self.N, {k: v * c for k, v in self.terms.items()})


def parse_terms(text: str, names: Sequence[str], N: int, foreign: Sequence[str] = ()) -> dict:
    """Parse ``text`` into ``{(exps, lam_power): CScalar}`` over ``names``.

    Names in ``foreign`` belong to another chart and raise :class:`ChartMismatch`.
    """
    src, maps = _caret_to_pow(text)

    def loc(line, col):
        # the source is wrapped in "(\n ... \n)", shifting lines by one
        line -= 1
        if not 0 < line <= len(maps):
            # an error inside the wrapper belongs at the end of the input
            return len(maps), maps[-1][-1] + 1
        row = maps[line - 1]
        return line, (row[col] if col < len(row) else row[-1]) + 1

    try:
        tree = ast.parse("(\n" + (src if src.strip() else "0") + "\n)", mode="eval")
    except SyntaxError as exc:
        line, col = loc(exc.lineno or 1, max((exc.offset or 1) - 1, 0))
        raise ParseError(exc.msg, line, col) from None
    nv = len(names)
    index = {n: k for k, n in enumerate(names)}
    zero_e = (0,) * nv

    def fail(node, msg):
        line, col = loc(node.lineno, node.col_offset)
        raise ParseError(msg, line, col)

    def ev(node) -> _Poly:
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant):
            if isinstance(node.value, bool) or not isinstance(node.value, int):
                fail(node, f"unsupported literal {node.value!r}; use integers and '/'")
            return _Poly(nv, N, {(zero_e, 0): cs(node.value)})
        if isinstance(node, ast.Name):
            name = node.id
            if name in index:
                e = [0] * nv
                e[index[name]] = 1
                return _Poly(nv, N, {(tuple(e), 0): ONE})
            if name == "lam":
                return _Poly(nv, N, {(zero_e, 1): ONE} if N >= 1 else {})
            if name == "i":
                return _Poly(nv, N, {(zero_e, 0): I})
            if name in foreign:
                line, col = loc(node.lineno, node.col_offset)
                raise ChartMismatch(f"line {line}, column {col}: variable {name!r} belongs to another chart; "
                                    f"this product expects {', '.join(names)}")
            fail(node, f"unknown name {name!r}")
        if isinstance(node, ast.UnaryOp):
            v = ev(node.operand)
            if isinstance(node.op, ast.USub):
                return -v
            if isinstance(node.op, ast.UAdd):
                return v
            fail(node, "unsupported unary operator")
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                base = ev(node.left)
                ex = ev(node.right).const()
                if ex is None or ex.im or ex.re.denominator != 1 or ex.re < 0:
                    fail(node.right, "exponent must be a non-negative integer")
                out = _Poly(nv, N, {(zero_e, 0): ONE})
                for _ in range(int(ex.re)):
                    out = out * base
                return out
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a + (-b)
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                c = b.const()
                if c is None:
                    fail(node.right, "division only by constants")
                if not c:
                    fail(node.right, "division by zero")
                return a.scale(c.inverse())
            fail(node, "unsupported operator")
        fail(node, f"unsupported syntax ({type(node).__name__})")

    return ev(tree).terms


def parse_elem(text: str, dim: int, N: int, chart: str = REAL) -> StarElem:
    other = COMPLEX if chart == REAL else REAL
    terms = parse_terms(text, var_names(dim, chart), N, foreign=_foreign_names(dim, other))
    return StarElem(dim, N, terms, chart)


def _foreign_names(dim: int, chart: str) -> list:
    # any index, so "q3" in a dim-1 complex job is still reported as a chart problem
    stems = ("q", "p") if chart == REAL else ("z", "zb")
    return var_names(max(dim, 9), chart) + [s for s in stems]


def print_elem(f: StarElem) -> str:
    return format_elem(f)


def _rat(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def terms_json(terms: dict) -> list:
    """``[{vars, lam, re, im}]`` with rationals as ``"a/b"`` strings, sorted."""
    out = []
    for (e, k), c in sorted(terms.items(), key=lambda t: (t[0][1], t[0][0])):
        out.append({"vars": list(e), "lam": k, "re": _rat(c.re), "im": _rat(c.im)})
    return out


def terms_from_json(items: Sequence[dict]) -> dict:
    return {(tuple(t["vars"]), t["lam"]): CScalar(Fraction(t["re"]), Fraction(t["im"])) for t in items}
