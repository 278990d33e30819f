"""Command-line front end.

Exit status: 0 on success, 1 when a verification comes out false, 2 on bad
input (the diagnostic goes to stderr). Documents contain exact scalars only,
as strings, and carry no timing unless ``--timing`` is given, so a fixed
command line always produces the same bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from .bezout import bezoutian_matrix, polynomial_degree_shape_check, unstable_degree
from .duplicant import (
    determinant_sign,
    duplicant,
    duplicant_closed_form,
    newton_basis_verify,
    sigma_by_expansion,
    sigma_determinant,
    sigma_matrix,
)
from .errors import A1DegError, DomainError
from .field import Field
from .gw import DiagonalForm, UnstableClass, gw_add, gw_equal
from .local_degree import LocalDegreeReport, local_degree, simple_zero_degree
from .parse import parse_polynomial, parse_rational_function, parse_roots, parse_scalar
from .poly import Polynomial, RationalFunction, RootDatum, normalize_pointed, split_roots
from .sampling import instance_rng, random_split_function
from .sums import DsumEntry, dsum_algebraic, naive_sum, verify_local_to_global

DEFAULT_SEED = 0

# Multiplicity shapes for the duplicant self-test, with fixed sample roots.
SELFTEST_SHAPES = [(1, 2), (1, 1), (1, 1, 1), (2, 2), (1, 3), (3, 2, 1), (2, 1, 1, 1)]
SELFTEST_ROOTS = ["2", "0", "-1", "3", "1/2"]


# ----------------------------------------------------------------------------
# serialization


def _s(a) -> str:
    return str(a)


def _matrix(rows) -> list[list[str]]:
    return [[_s(a) for a in row] for row in rows]


def _poly(p: Polynomial) -> dict:
    return {"text": str(p), "coefficients": [_s(p[i]) for i in range(p.degree + 1)]}


def _function(F: RationalFunction) -> dict:
    return {
        "text": str(F),
        "numerator": _poly(F.numerator),
        "denominator": _poly(F.denominator),
        "leading_coefficient": _s(F.leading_coefficient),
    }


def _class(c: UnstableClass) -> dict:
    doc = {
        "positive": [_s(a) for a in c.form.positive],
        "negative": [_s(a) for a in c.form.negative],
        "unit": _s(c.unit),
        "rank": c.rank,
        "discriminant": _s(c.discriminant()),
    }
    if c.field.is_rational:
        doc["signature"] = c.signature()
    return doc


def _local(F: RationalFunction, rep: LocalDegreeReport) -> dict:
    doc = {
        "root": _s(rep.root),
        "multiplicity": rep.multiplicity,
        "principal_part": {f"A{j}": _s(rep.principal_part.A(j)) for j in range(1, rep.multiplicity + 1)},
        "newton_matrix": _matrix(rep.newton_matrix.rows()),
        "class": _class(rep.degree),
    }
    if rep.multiplicity == 1:
        simple = simple_zero_degree(F, rep.root)
        doc["simple_zero_class"] = _class(simple)
        doc["simple_zero_agrees"] = gw_equal(simple, rep.degree)
    return doc


# ----------------------------------------------------------------------------
# input helpers


def _read_function(text: str, field: Field) -> RationalFunction:
    return normalize_pointed(*parse_rational_function(text, field))


def _function_from_roots(roots: list[RootDatum], denominator: str | None, field: Field) -> RationalFunction:
    f = Polynomial.from_roots([(d.root, d.multiplicity) for d in roots], field)
    g = parse_polynomial(denominator, field) if denominator else Polynomial.constant(1, field)
    return normalize_pointed(f, g)


def _read_entry(text: str, field: Field) -> DsumEntry:
    """``POINT:a,b,...[|c,d,...][@UNIT]``; the unit defaults to the determinant."""
    point, sep, rest = text.partition(":")
    if not sep:
        raise DomainError(f"entry {text!r} lacks ':' between point and class")
    rest, at, unit = rest.partition("@")
    pos, _, neg = rest.partition("|")

    def scalars(part: str) -> tuple:
        return tuple(parse_scalar(a, field) for a in part.split(",") if a.strip())

    form = DiagonalForm(scalars(pos), scalars(neg), field)
    u = parse_scalar(unit, field) if at else form.determinant()
    return DsumEntry(UnstableClass(form, u), parse_scalar(point, field))


# ----------------------------------------------------------------------------
# commands; each returns (inputs, result, verification)


def cmd_degree(args, field):
    F = _read_function(args.expression, field)
    B = bezoutian_matrix(F)
    result = {"function": _function(F), "bezoutian": _matrix(B.rows()), "class": _class(unstable_degree(F))}
    checks = {}
    if F.denominator.is_constant():
        checks["polynomial_shape"] = polynomial_degree_shape_check(F)
    return {"expression": args.expression}, result, checks


def cmd_local(args, field):
    F = _read_function(args.expression, field)
    if args.at is None:
        points = [d.root for d in split_roots(F.numerator)]
    else:
        p = parse_polynomial(args.at, field)
        points = [p[0] if p.degree == 0 else p]
    reports = [_local(F, local_degree(F, r)) for r in points]
    checks = {}
    simple = [r["simple_zero_agrees"] for r in reports if "simple_zero_agrees" in r]
    if simple:
        checks["simple_zero_formula"] = all(simple)
    inputs = {"expression": args.expression, "at": args.at}
    return inputs, {"function": _function(F), "locals": reports}, checks


def cmd_duplicant(args, field):
    checks = {}
    if args.roots:
        roots = parse_roots(args.roots, field)
        lc = field.one
    else:
        F = _read_function(args.expression, field)
        roots = split_roots(F.numerator)
        lc = F.leading_coefficient
        checks["newton_basis"] = newton_basis_verify(F)
    if args.lc is not None:
        lc = parse_scalar(args.lc, field)
    S = sigma_matrix(roots)
    value = duplicant(roots, lc)
    closed = duplicant_closed_form(roots, lc)
    checks["closed_form"] = value == closed
    checks["sigma_matches_expansion"] = [list(r) for r in S.entries] == sigma_by_expansion(roots)
    result = {
        "roots": [{"root": _s(d.root), "multiplicity": d.multiplicity} for d in roots],
        "leading_coefficient": _s(lc),
        "sigma": _matrix(S.rows()),
        "sigma_blocks": [_matrix(S.block(i)) for i in range(len(roots))],
        "determinant": _s(sigma_determinant(roots)),
        "determinant_sign": determinant_sign(roots),
        "duplicant": _s(value),
        "closed_form": _s(closed),
    }
    inputs = {"expression": args.expression, "roots": args.roots, "lc": args.lc}
    return inputs, result, checks


def _ltg_doc(F: RationalFunction) -> dict:
    rep = verify_local_to_global(F)
    locals_ = [_local(F, r) for r in rep.local_reports]
    simple = all(r.get("simple_zero_agrees", True) for r in locals_)
    return {
        "function": _function(F),
        "global": _class(rep.global_degree),
        "locals": locals_,
        "dsum": _class(rep.dsum_degree),
        "classes_equal": rep.classes_equal,
        "matrix_identity_holds": rep.matrix_identity_holds,
        "simple_zero_formula": simple,
        "ok": rep.ok and simple,
    }


def cmd_dsum(args, field):
    inputs = {"expression": args.expression, "roots": args.roots, "entries": args.entry}
    if args.entry:
        entries = [_read_entry(e, field) for e in args.entry]
        result = {
            "entries": [{"point": _s(e.point), "class": _class(e.degree)} for e in entries],
            "dsum": _class(dsum_algebraic(entries)),
        }
        return inputs, result, {}
    if args.roots:
        F = _function_from_roots(parse_roots(args.roots, field), args.denominator, field)
    else:
        F = _read_function(args.expression, field)
    doc = _ltg_doc(F)
    checks = {k: doc.pop(k) for k in ("classes_equal", "matrix_identity_holds", "simple_zero_formula")}
    doc.pop("ok")
    return inputs, doc, checks


def cmd_nsum(args, field):
    F1 = _read_function(args.first, field)
    F2 = _read_function(args.second, field)
    F3 = naive_sum(F1, F2)
    d1, d2, d3 = unstable_degree(F1), unstable_degree(F2), unstable_degree(F3)
    result = {
        "summands": [_function(F1), _function(F2)],
        "sum": _function(F3),
        "degrees": [_class(d1), _class(d2)],
        "sum_degree": _class(d3),
    }
    return {"first": args.first, "second": args.second}, result, {"homomorphism": gw_equal(d3, gw_add(d1, d2))}


def _random_instance(job: tuple) -> dict:
    field_text, seed, index, max_degree, max_roots = job
    field = Field.parse(field_text)
    F = random_split_function(field, instance_rng(seed, index), max_degree, max_roots)
    return {"index": index, **_ltg_doc(F)}


def cmd_verify_ltg(args, field):
    if not args.expression and not args.random:
        raise DomainError("give expressions or --random N")
    docs = [{"index": i, **_ltg_doc(_read_function(e, field))} for i, e in enumerate(args.expression)]
    if args.random:
        start = len(docs)
        jobs = [(str(field), args.seed, i, args.max_degree, args.max_roots) for i in range(args.random)]
        if args.workers > 1:
            with ProcessPoolExecutor(max_workers=args.workers) as pool:
                rand_docs = list(pool.map(_random_instance, jobs, chunksize=8))
        else:
            rand_docs = [_random_instance(j) for j in jobs]
        for d in rand_docs:
            d["index"] += start
        docs.extend(rand_docs)
    passed = sum(d["ok"] for d in docs)
    inputs = {
        "expressions": list(args.expression),
        "random": args.random,
        "seed": args.seed,
        "max_degree": args.max_degree,
        "max_roots": args.max_roots,
    }
    result = {"instances": docs, "passed": passed, "total": len(docs)}
    return inputs, result, {"all_pass": passed == len(docs)}


def _selftest_duplicant(field: Field) -> tuple[list, bool]:
    out, ok = [], True
    for shape in SELFTEST_SHAPES:
        roots = [RootDatum(field(r), e) for r, e in zip(SELFTEST_ROOTS, shape)]
        S = sigma_matrix(roots)
        value = duplicant(roots)
        closed = duplicant_closed_form(roots)
        agree = value == closed and [list(r) for r in S.entries] == sigma_by_expansion(roots)
        ok &= agree
        out.append(
            {
                "shape": list(shape),
                "roots": [_s(d.root) for d in roots],
                "sigma_blocks": [_matrix(S.block(i)) for i in range(len(roots))],
                "determinant": _s(sigma_determinant(roots)),
                "duplicant": _s(value),
                "closed_form": _s(closed),
                "agrees": agree,
            }
        )
    return out, ok


def _selftest_examples(field: Field) -> tuple[list, bool]:
    """Worked examples with known answers."""
    out, ok = [], True

    def record(name, passed):
        nonlocal ok
        ok &= passed
        out.append({"name": name, "agrees": passed})

    F = _read_function("(x^2-1)/x", field)
    d = unstable_degree(F)
    record("degree (x^2-1)/x is <1,1> with unit 1", gw_equal(d, UnstableClass(DiagonalForm((field(1), field(1)), (), field), field(1))))
    x = _read_function("x", field)
    record("x (+)N x = (x^2-1)/x", naive_sum(x, x) == F)
    record("local-to-global on (x^2-1)/x", verify_local_to_global(F).ok)
    record("duplicant of roots 2:1,0:2 is 16", duplicant(parse_roots("2:1,0:2", field)) == field(16))
    return out, ok


def cmd_selftest(args, field):
    result, checks = {}, {}
    if args.suite in ("duplicant", "all"):
        result["duplicant"], checks["duplicant"] = _selftest_duplicant(field)
    if args.suite in ("examples", "all"):
        result["examples"], checks["examples"] = _selftest_examples(field)
    return {"suite": args.suite}, result, checks


# ----------------------------------------------------------------------------
# text rendering


def _text_class(c: dict) -> str:
    s = "<" + ", ".join(c["positive"]) + ">"
    if c["negative"]:
        s += " - <" + ", ".join(c["negative"]) + ">"
    s += f", unit {c['unit']} (rank {c['rank']}, disc {c['discriminant']}"
    if "signature" in c:
        s += f", signature {c['signature']}"
    return s + ")"


def _text_matrix(rows: list, indent: str = "    ") -> list[str]:
    if not rows:
        return [indent + "[]"]
    width = max(len(a) for row in rows for a in row)
    return [indent + "[" + "  ".join(a.rjust(width) for a in row) + "]" for row in rows]


def _render_text(doc: dict) -> str:
    lines = [f"command: {doc['command']}   field: {doc['field']}"]
    r = doc["result"]
    cmd = doc["command"]
    if "function" in r:
        lines.append(f"function: {r['function']['text']}")
    if cmd == "degree":
        lines.append("bezoutian:")
        lines += _text_matrix(r["bezoutian"])
        lines.append(f"degree: {_text_class(r['class'])}")
    if cmd in ("local", "dsum") and "locals" in r:
        for loc in r["locals"]:
            lines.append(f"root {loc['root']} (multiplicity {loc['multiplicity']}):")
            lines += _text_matrix(loc["newton_matrix"])
            lines.append(f"  local degree: {_text_class(loc['class'])}")
    if cmd == "dsum":
        if "global" in r:
            lines.append(f"global degree: {_text_class(r['global'])}")
        if "entries" in r:
            for e in r["entries"]:
                lines.append(f"entry at {e['point']}: {_text_class(e['class'])}")
        lines.append(f"D-sum: {_text_class(r['dsum'])}")
    if cmd == "duplicant":
        roots = ", ".join(f"{d['root']}^{d['multiplicity']}" for d in r["roots"])
        lines.append(f"roots: {roots}   leading coefficient: {r['leading_coefficient']}")
        lines.append("Sigma:")
        lines += _text_matrix(r["sigma"])
        lines.append(f"det Sigma: {r['determinant']} (sign {r['determinant_sign']:+d})")
        lines.append(f"duplicant: {r['duplicant']}")
        lines.append(f"closed form: {r['closed_form']}")
    if cmd == "nsum":
        lines.append(f"sum: {r['sum']['text']}")
        for name, c in zip(("deg F1", "deg F2"), r["degrees"]):
            lines.append(f"{name}: {_text_class(c)}")
        lines.append(f"deg sum: {_text_class(r['sum_degree'])}")
    if cmd == "verify-ltg":
        for d in r["instances"]:
            status = "ok  " if d["ok"] else "FAIL"
            lines.append(f"[{d['index']:>4}] {status} {d['function']['text']}")
        lines.append(f"{r['passed']}/{r['total']} pass")
    if cmd == "selftest":
        for entry in r.get("duplicant", []):
            lines.append(f"shape {entry['shape']} at roots {entry['roots']}:")
            for ell, block in enumerate(entry["sigma_blocks"], 1):
                lines.append(f"  Sigma_{ell}:")
                lines += _text_matrix(block)
            lines.append(f"  det {entry['determinant']}   duplicant {entry['duplicant']}   closed form {entry['closed_form']}")
        for entry in r.get("examples", []):
            lines.append(f"{'ok  ' if entry['agrees'] else 'FAIL'} {entry['name']}")
    for name, value in doc["verification"].items():
        lines.append(f"check {name}: {'pass' if value else 'FAIL'}")
    if "timing" in doc:
        lines.append(f"elapsed: {doc['timing']['seconds']:.3f} s")
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------------
# argument parsing


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="Q", help="Q or Fp:<odd prime> (default Q)")
    common.add_argument("--json", action="store_true", help="emit the JSON document on stdout")
    common.add_argument("--out", metavar="PATH", help="also write the JSON document to PATH")
    common.add_argument("--timing", action="store_true", help="include wall-clock time (breaks byte-identical output)")

    parser = argparse.ArgumentParser(
        prog="a1deg",
        description="Unstable A^1-degrees of pointed rational functions over Q and F_p.",
        epilog="Expressions starting with '-' must follow a '--' separator.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("degree", parents=[common], help="global unstable degree via the Bezoutian")
    p.add_argument("expression")
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("local", parents=[common], help="local degrees via Newton matrices")
    p.add_argument("expression")
    p.add_argument("--at", help="a point, or the minimal polynomial of a closed point (default: every root)")
    p.set_defaults(func=cmd_local)

    p = sub.add_parser("duplicant", parents=[common], help="Sigma matrix, its determinant and the duplicant")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("expression", nargs="?")
    src.add_argument("--roots", help='factored numerator, e.g. "2:1,0:2"')
    p.add_argument("--lc", help="leading coefficient c (default 1, or that of the expression)")
    p.set_defaults(func=cmd_duplicant)

    p = sub.add_parser("dsum", parents=[common], help="algebraic D-sum")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("expression", nargs="?")
    src.add_argument("--roots", help='numerator as roots "r:e,..."')
    src.add_argument("--entry", action="append", help='"POINT:a,b[|c,d][@UNIT]", repeatable')
    p.add_argument("--denominator", help="denominator g for --roots (default 1)")
    p.set_defaults(func=cmd_dsum)

    p = sub.add_parser("nsum", parents=[common], help="naive sum of two functions")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_nsum)

    p = sub.add_parser("verify-ltg", parents=[common], help="check local-to-global on given or random functions")
    p.add_argument("expression", nargs="*")
    p.add_argument("--random", type=int, default=0, metavar="N", help="number of random split instances")
    p.add_argument("--seed", type=_seed, default=DEFAULT_SEED)
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--max-degree", type=_positive, default=8)
    p.add_argument("--max-roots", type=_positive, default=4)
    p.set_defaults(func=cmd_verify_ltg)

    p = sub.add_parser("selftest", parents=[common], help="built-in reference computations")
    p.add_argument("suite", nargs="?", choices=["duplicant", "examples", "all"], default="all")
    p.set_defaults(func=cmd_selftest)
    return parser


def run(argv: Sequence[str] | None = None) -> tuple[int, dict | None]:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        field = Field.parse(args.field)
        if getattr(args, "random", 0) < 0:
            raise DomainError("--random must be nonnegative")
        t0 = time.perf_counter()
        inputs, result, checks = args.func(args, field)
        elapsed = time.perf_counter() - t0
    except (A1DegError, ValueError, ZeroDivisionError) as exc:
        print(f"a1deg {args.command}: error: {exc}", file=sys.stderr)
        return 2, None
    doc = {
        "command": args.command,
        "field": str(field),
        "inputs": inputs,
        "result": result,
        "verification": checks,
        "ok": all(checks.values()),
    }
    if args.timing:
        doc["timing"] = {"seconds": elapsed}
    text = json.dumps(doc, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    sys.stdout.write(text if args.json else _render_text(doc))
    return (0 if doc["ok"] else 1), doc


def main(argv: Sequence[str] | None = None) -> int:
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
