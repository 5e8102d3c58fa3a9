"""Command-line interface: ``deformq <subcommand> ...``."""

from __future__ import annotations

import argparse
import inspect
import json
import sys
from fractions import Fraction

from . import fixtures
from .exprs import ParseError, parse_elem, parse_terms, print_elem, terms_json
from .fedosov import SymplecticData, fedosov_star
from .gutt import GuttAlgebra
from .phasepoly import ChartMismatch, DimensionMismatch, StarElem
from .starproducts import StarSpec, kappa, neumaier, standard, star, star_commutator, tkappa, weyl, wick
from .suites import DEFAULT_SEED, SUITES

EXIT_FAIL = 1
EXIT_USAGE = 2


class CliError(Exception):
    pass


def parse_product(text: str, dim: int):
    """``std|weyl|kappa:<rat>|wick|tkappa:<rat>|gutt|fedosov``."""
    fam, _, param = text.partition(":")
    if fam in ("std", "standard"):
        return standard(dim)
    if fam == "weyl":
        return weyl(dim)
    if fam == "wick":
        return wick(dim)
    if fam in ("kappa", "tkappa"):
        if not param:
            raise CliError(f"product {fam} needs a parameter, e.g. {fam}:1/3")
        try:
            k = Fraction(param)
        except ValueError:
            raise CliError(f"bad rational {param!r}") from None
        return kappa(k, dim) if fam == "kappa" else tkappa(k, dim)
    if fam in ("gutt", "fedosov"):
        return fam
    raise CliError(f"unknown product {text!r}")


def _elem_doc(f: StarElem) -> dict:
    return {"text": print_elem(f), "terms": terms_json(f.terms)}


def _gutt_doc(p) -> dict:
    d = p.alg.lie.dim
    terms = {}
    for (mono, k), c in p.terms.items():
        e = [0] * d
        for i in mono:
            e[i] += 1
        terms[(tuple(e), k)] = c
    return {"text": repr(p), "terms": terms_json(terms)}


def _gutt_parse(alg: GuttAlgebra, text: str):
    names = [f"e{k + 1}" for k in range(alg.lie.dim)]
    terms = parse_terms(text, names, alg.N)
    out = {}
    for (e, k), c in terms.items():
        mono = tuple(i for i, x in enumerate(e) for _ in range(x))
        out[(mono, k)] = c
    return alg.poly(out)


def _binary(args, op: str) -> dict:
    prod = parse_product(args.product, args.dim)
    if prod == "gutt":
        alg = GuttAlgebra(fixtures.lie_fixture(args.fixture or "heisenberg"), args.order)
        f, g = _gutt_parse(alg, args.f), _gutt_parse(alg, args.g)
        res = alg.star(f, g) if op == "star" else alg.commutator(f, g)
        return {"product": "gutt", "lie": alg.lie.name, "order": args.order, "result": _gutt_doc(res)}
    if prod == "fedosov":
        data = fixtures.load_symplectic(args.fixture) if args.fixture else SymplecticData.canonical(args.dim)
        f, g = (parse_elem(t, data.n, args.order) for t in (args.f, args.g))
        res = fedosov_star(f, g, data)
        if op == "commutator":
            res = res - fedosov_star(g, f, data)
        return {"product": "fedosov", "dim": data.n, "order": args.order, "result": _elem_doc(res)}
    f, g = (parse_elem(t, args.dim, args.order, prod.chart) for t in (args.f, args.g))
    res = star(prod, f, g) if op == "star" else star_commutator(prod, f, g)
    return {"product": args.product, "dim": args.dim, "order": args.order, "result": _elem_doc(res)}


def cmd_star(args):
    return _binary(args, "star"), 0


def cmd_commutator(args):
    return _binary(args, "commutator"), 0


def cmd_gutt(args):
    args.product = "gutt"
    return _binary(args, args.op), 0


def cmd_fedosov(args):
    args.product = "fedosov"
    return _binary(args, args.op), 0


def cmd_neumaier(args):
    k = Fraction(args.kappa)
    f = parse_elem(args.f, args.dim, args.order)
    return {"kappa": str(k), "dim": args.dim, "order": args.order, "result": _elem_doc(neumaier(k, f))}, 0


def _label(H, x):
    if hasattr(x, "vec"):
        return " + ".join(f"{c}*{H.labels[i]}" for i, c in sorted(x.vec.items())) or "0"
    return repr(x)


def cmd_hopf_verify(args):
    H = fixtures.hopf_fixture(args.fixture or "z2")
    bad = H.verify()
    doc = {
        "fixture": H.name,
        "dim": H.dim,
        "violations": [{"axiom": v[0], "at": [_label(H, x) for x in v[1:]]} for v in bad],
        "cocommutative": H.is_cocommutative(),
        "antipode_involutive": H.antipode_involutive(),
    }
    return doc, (EXIT_FAIL if bad else 0)


def cmd_crossed(args):
    cp = fixtures.crossed_fixture(args.fixture or "fz2-z2", args.order)
    rep = cp.verify()
    doc = {"fixture": args.fixture or "fz2-z2", "checked": rep.checked, "ok": rep.ok,
           "violations": [repr(v)[:500] for v in rep.violations[:10]]}
    return doc, (0 if rep.ok else EXIT_FAIL)


def cmd_check(args):
    fn = SUITES.get(args.suite)
    if fn is None:
        raise CliError(f"unknown suite {args.suite!r}; available: {', '.join(SUITES)}")
    params = inspect.signature(fn).parameters
    kw = {}
    if "seed" in params:
        kw["seed"] = args.seed
    if args.trials is not None and "trials" in params:
        kw["trials"] = args.trials
    res = fn(**kw)
    doc = {
        "suite": res.suite,
        "ok": res.ok,
        "seconds": round(res.seconds, 3),
        "seed": args.seed,
        "checks": [{"name": c.name, "ok": c.ok, "checked": c.checked,
                    "counterexample": None if c.ok else repr(c.counterexample)[:1000]} for c in res.checks],
    }
    return doc, (0 if res.ok else EXIT_FAIL)


def _render_text(doc) -> str:
    if "result" in doc:
        return doc["result"]["text"]
    if "checks" in doc:
        lines = []
        for c in doc["checks"]:
            lines.append(f"{'PASS' if c['ok'] else 'FAIL'}  {c['name']}  ({c['checked']} cases)")
            if not c["ok"]:
                lines.append(f"      first counterexample: {c['counterexample']}")
        lines.append(f"{doc['suite']}: {'pass' if doc['ok'] else 'FAIL'}")
        return "\n".join(lines)
    if "violations" in doc and "cocommutative" in doc:
        lines = [f"{doc['fixture']} (dim {doc['dim']}): "
                 f"{'all axioms hold' if not doc['violations'] else str(len(doc['violations'])) + ' violations'}"]
        lines += [f"  {v['axiom']} at {', '.join(v['at'])}" for v in doc["violations"][:20]]
        lines.append(f"  cocommutative: {doc['cocommutative']}; S^2 = id: {doc['antipode_involutive']}")
        return "\n".join(lines)
    if "checked" in doc:
        head = f"{doc['fixture']}: {'ok' if doc['ok'] else 'FAIL'} ({doc['checked']} cases)"
        return "\n".join([head] + [f"  {v}" for v in doc["violations"]])
    return json.dumps(doc, indent=2)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dim", type=int, default=1, help="degrees of freedom n")
    common.add_argument("--order", type=int, default=4, help="truncation order N in lam")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--trials", type=int, default=None)
    common.add_argument("--fixture", default=None, help="built-in fixture name or JSON file")
    common.add_argument("--json", action="store_true", help="emit JSON")

    p = argparse.ArgumentParser(prog="deformq", description="Exact star products and Hopf-algebra checks.")
    sub = p.add_subparsers(dest="command", required=True)

    for name, fn in (("star", cmd_star), ("commutator", cmd_commutator)):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--product", default="weyl")
        sp.add_argument("f")
        sp.add_argument("g")
        sp.set_defaults(func=fn)
    for name, fn in (("gutt", cmd_gutt), ("fedosov", cmd_fedosov)):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--op", choices=["star", "commutator"], default="star")
        sp.add_argument("f")
        sp.add_argument("g")
        sp.set_defaults(func=fn)
    sp = sub.add_parser("neumaier", parents=[common])
    sp.add_argument("--kappa", default="1")
    sp.add_argument("f")
    sp.set_defaults(func=cmd_neumaier)
    sp = sub.add_parser("crossed", parents=[common])
    sp.set_defaults(func=cmd_crossed)
    sp = sub.add_parser("hopf-verify", parents=[common])
    sp.set_defaults(func=cmd_hopf_verify)
    sp = sub.add_parser("check", parents=[common])
    sp.add_argument("suite", help=", ".join(SUITES))
    sp.set_defaults(func=cmd_check)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.dim < 1 or args.order < 0:
        print("error: need --dim >= 1 and --order >= 0", file=err)
        return EXIT_USAGE
    try:
        doc, status = args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_USAGE
    except ChartMismatch as exc:
        print(f"chart mismatch: {exc}", file=err)
        return EXIT_USAGE
    except (CliError, DimensionMismatch, fixtures.FixtureError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    if args.json:
        print(json.dumps(doc, indent=2), file=out)
    else:
        print(_render_text(doc), file=out)
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
