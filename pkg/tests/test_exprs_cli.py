import io
import json

import pytest

from deformq.cli import run
from deformq.exprs import ParseError, parse_elem, print_elem, terms_from_json, terms_json
from deformq.phasepoly import COMPLEX, REAL, ChartMismatch
from deformq.randgen import rand_elem


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    rc = run(list(argv), out, err)
    return rc, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("chart", [REAL, COMPLEX])
def test_print_parse_round_trip(rng, chart):
    for _ in range(30):
        f = rand_elem(rng, 2, 4, chart=chart)
        assert parse_elem(print_elem(f), 2, 4, chart) == f
        assert terms_from_json(terms_json(f.terms)) == f.terms


def test_parse_basics():
    f = parse_elem("(q1 + p1)^2 - 2*q1*p1 + i*lam/3", 1, 4)
    assert f == parse_elem("q1**2 + p1^2 + (1/3)*i*lam", 1, 4)
    assert parse_elem("lam^5", 1, 4) == parse_elem("0", 1, 4)


@pytest.mark.parametrize("text,line,col", [
    ("q1 +* p1", 1, 5),
    ("q1 +\n  foo", 2, 3),
    ("q1 / p1", 1, 6),
    ("q1^(1/2)", 1, 5),
    ("q1 + 1.5", 1, 6),
    ("(q1 + p1", 1, 9),
])
def test_parse_errors_have_location(text, line, col):
    with pytest.raises(ParseError) as info:
        parse_elem(text, 1, 4)
    assert (info.value.line, info.value.col) == (line, col)


def test_chart_mismatch():
    with pytest.raises(ChartMismatch):
        parse_elem("z1*zb1", 1, 4, REAL)
    with pytest.raises(ChartMismatch):
        parse_elem("q1", 1, 4, COMPLEX)


def test_cli_star_weyl_json():
    rc, out, _ = cli("star", "--product", "weyl", "--dim", "1", "--order", "4", "--json", "q1", "p1")
    assert rc == 0
    doc = json.loads(out)
    assert doc["result"]["terms"] == [
        {"vars": [1, 1], "lam": 0, "re": "1/1", "im": "0/1"},
        {"vars": [0, 0], "lam": 1, "re": "0/1", "im": "1/2"},
    ]


def test_cli_commutators():
    assert cli("commutator", "--product", "kappa:1/3", "q1", "p1")[1].strip() == "1*i*lam"
    assert cli("commutator", "--product", "wick", "z1", "zb1")[1].strip() == "2*lam"


def test_cli_wick_rejects_real_chart():
    rc, out, err = cli("star", "--product", "wick", "q1", "p1")
    assert rc == 2 and out == "" and "chart mismatch" in err


def test_cli_usage_errors():
    assert cli("star", "--product", "kappa", "q1", "p1")[0] == 2
    assert cli("star", "q1 +", "p1")[0] == 2
    assert cli("check", "nope")[0] == 2
    assert cli("bogus")[0] == 2


def test_cli_gutt_and_fedosov():
    assert cli("gutt", "e1", "e2")[1].strip() == "(1)*e1*e2 + (1/2)*e3*lam"
    a = cli("fedosov", "q1^2", "p1^2")[1]
    b = cli("star", "--product", "weyl", "q1^2", "p1^2")[1]
    assert a == b


def test_cli_neumaier():
    rc, out, _ = cli("neumaier", "--kappa", "1", "q1*p1")
    assert rc == 0 and "lam" in out


def test_cli_check_suites_deterministic():
    rc, out1, _ = cli("check", "poincare", "--dim", "1", "--trials", "20", "--json")
    assert rc == 0
    _, out2, _ = cli("check", "poincare", "--dim", "1", "--trials", "20", "--json")
    strip = lambda s: {k: v for k, v in json.loads(s).items() if k != "seconds"}
    assert strip(out1) == strip(out2)
    assert cli("check", "morita")[0] == 1


def test_cli_hopf_and_crossed():
    rc, out, _ = cli("hopf-verify", "--fixture", "q2")
    assert rc == 0 and "S^2 = id: False" in out and "cocommutative: False" in out
    assert cli("crossed", "--fixture", "fz2-z2")[0] == 0


def _z2_doc():
    return {
        "labels": ["e", "a"],
        "unit": {"0": "1"},
        "mult": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"], [1, 1, 0, "1"]],
        "comult": [[0, 0, 0, "1"], [1, 1, 1, "1"]],
        "counit": ["1", "1"],
        "antipode": [[0, 0, "1"], [1, 1, "1"]],
    }


def test_cli_hopf_json_fixture(tmp_path):
    good = tmp_path / "z2.json"
    good.write_text(json.dumps(_z2_doc()))
    assert cli("hopf-verify", "--fixture", str(good))[0] == 0
    doc = _z2_doc()
    doc["counit"] = ["1", "2"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    rc, out, _ = cli("hopf-verify", "--fixture", str(bad), "--json")
    assert rc == 1 and json.loads(out)["violations"]
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert cli("hopf-verify", "--fixture", str(broken))[0] == 2
