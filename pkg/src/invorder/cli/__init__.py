"""Command-line front end.

Exit codes: 0 success or affirmative verdict, 1 negative verdict, 2 invalid
input, 3 Magnus depth cap reached.
"""
from __future__ import annotations

import argparse
import os
import shlex
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from .. import __version__
from ..abelorder import NoInvariantOrder, NotAutomorphism, char_poly, order_oracle, preserves_order
from ..config import DEPTH_ENV, OrderConfig
from ..exactpoly import RatPoly, factor_rationals, squarefree_part
from ..freeord import (
    DepthExceeded,
    InvariantOrder,
    abelianization_matrix,
    companion_automorphism,
    magnus_depth,
    verify_product_eigenvalues,
)
from ..knotcheck import (
    Convention,
    VerdictKind,
    alexander_from_conway,
    center,
    conway_from_alexander,
    orderability_verdict,
)
from ..realroots import count_real_roots, real_roots, sign_of_poly_at
from ..specialgal import Condition, is_special
from . import report as rep
from .parsing import (
    ParseError,
    parse_endo,
    parse_laurent,
    parse_matrix,
    parse_poly,
    parse_range,
    parse_vector,
    parse_word,
)

__all__ = ["main", "run", "run_line", "CliError", "ParseError"]

OK, NEGATIVE, INVALID, DEPTH = 0, 1, 2, 3

_CONDITION_LABEL = {
    Condition.ODD_PRIME_POWER_REAL_NEG_CONST: "i",
    Condition.ALL_ROOTS_POSITIVE: "ii",
    Condition.FAILS: "none",
}


class CliError(Exception):
    def __init__(self, code: int, kind: str, message: str):
        self.code, self.kind = code, kind
        super().__init__(message)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(INVALID, "UsageError", message)


def _read_source(arg: str) -> str:
    """File contents, or the argument itself when it is inline JSON."""
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read()
    if arg.lstrip().startswith(("[", "{")):
        return arg
    raise CliError(INVALID, "InvalidInput", f"no such file: {arg}")


# subcommand handlers: (args, config) -> (exit code, result, evidence)


def _factor(a, cfg):
    f = parse_poly(a.poly)
    if f.is_zero():
        raise CliError(INVALID, "InvalidInput", "cannot factor the zero polynomial")
    fac = factor_rationals(f)
    ev = {"degree": f.degree, "squarefree": f.degree < 1 or squarefree_part(f).degree == f.degree,
          "expands_to_input": fac.expand() == f.to_rat()}
    return OK, rep.factorization(fac), ev


def _roots(a, cfg):
    f = parse_poly(a.poly)
    if f.degree < 1:
        raise CliError(INVALID, "InvalidInput", "roots needs a polynomial of positive degree")
    lo, hi = parse_range(a.range) if a.range else (None, None)
    if lo is not None and hi is not None and lo >= hi:
        raise CliError(INVALID, "InvalidInput", f"empty range {a.range}")
    roots = [r for r in real_roots(f) if _inside(r, lo, hi)]
    count = count_real_roots(f, lo, hi)
    if count != len(roots):
        raise ArithmeticError("Sturm count disagrees with isolated roots")
    res = {
        "range": [None if lo is None else rep.rational(lo), None if hi is None else rep.rational(hi)],
        "count": count,
        "roots": [rep.algebraic(r, cfg.approx_digits) for r in roots],
    }
    ev = {"distinct_real_roots": count_real_roots(f), "degree": f.degree}
    return OK, res, ev


def _inside(r, lo, hi) -> bool:
    if lo is not None and sign_of_poly_at(RatPoly((-lo, 1)), r) <= 0:
        return False
    if hi is not None and sign_of_poly_at(RatPoly((hi, -1)), r) <= 0:
        return False
    return True


def _special(a, cfg):
    f = parse_poly(a.poly)
    try:
        v = is_special(f)
    except ValueError as exc:
        raise CliError(INVALID, "InvalidInput", str(exc)) from None
    factors = [{"factor": str(g), "degree": g.degree, "condition": _CONDITION_LABEL[c]} for g, c in v.per_factor]
    res = {"special": v.is_special, "factors": factors}
    ev = {"factorization": rep.factorization(v.factorization),
          "failing": [str(g) for g, c in v.per_factor if c is Condition.FAILS]}
    return (OK if v.is_special else NEGATIVE), res, ev


def _matrix(arg):
    return parse_matrix(_read_source(arg))


def _abelian_check(a, cfg):
    m = _matrix(a.matrix)
    chi = char_poly(m)
    ok, evidence = preserves_order(m, chi)
    res = {"preserves_order": ok, "charpoly": str(chi), "determinant": m.det()}
    ev = {
        "factors": [{"factor": str(g), "positive_real_root": hit} for g, hit in evidence],
        "reasons": [f"{g} {'has' if hit else 'has no'} positive real root" for g, hit in evidence],
    }
    return (OK if ok else NEGATIVE), res, ev


def _abelian_sign(a, cfg):
    m = _matrix(a.matrix)
    v = parse_vector(a.vector)
    if len(v) != m.n:
        raise CliError(INVALID, "InvalidInput", f"vector of length {len(v)} for dimension {m.n}")
    o = order_oracle(m)
    s = o.sign(v)
    res = {"sign": s, "relation": {1: "positive", -1: "negative", 0: "zero"}[s]}
    ev = {"flag": [{"factor": str(lev.g), "dim": lev.dim, "rho": rep.algebraic(lev.rho, cfg.approx_digits)}
                   for lev in o.flag.levels]}
    return OK, res, ev


def _knot_verdict(a, cfg):
    lp = parse_laurent(a.laurent)
    v = orderability_verdict(lp)
    res = {"verdict": v.kind.value, "notes": list(v.notes)}
    ev = {"fibred_check": {"symmetric": v.check.symmetric, "value_at_one": v.check.value_at_one,
                           "monic_extremes": v.check.monic_extremes, "failures": list(v.check.failures)}}
    if v.kind is not VerdictKind.INVALID_INPUT:
        ev.update({
            "normalized": str(v.normalized),
            "factorization": rep.factorization(v.factorization),
            "distinct_roots": v.distinct_roots,
            "real_roots": v.real_roots,
            "positive_roots": v.positive_roots,
            "tpr": v.positive_roots == v.distinct_roots,
            "special": v.special.is_special,
            "special_factors": [{"factor": str(g), "condition": _CONDITION_LABEL[c]} for g, c in v.special.per_factor],
        })
    code = {VerdictKind.ORDERABLE_TPR: OK, VerdictKind.ORDERABLE_SPECIAL: OK,
            VerdictKind.INCONCLUSIVE: NEGATIVE, VerdictKind.INVALID_INPUT: INVALID}[v.kind]
    return code, res, ev


def _knot_conway(a, cfg):
    lp = parse_laurent(a.laurent)
    conv = Convention(a.convention)
    try:
        nabla = conway_from_alexander(lp, conv)
    except ValueError as exc:
        raise CliError(INVALID, "InvalidInput", str(exc)) from None
    back = alexander_from_conway(nabla, conv)
    res = {"conway": rep.ascending(nabla, "z"), "convention": conv.value}
    ev = {"round_trip": back == center(lp), "centred_alexander": _laurent_text(back)}
    return OK, res, ev


def _laurent_text(lp) -> str:
    parts = []
    for e in sorted(lp.terms(), reverse=True):
        c = lp.terms()[e]
        mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
        text = mono if (abs(c) == 1 and e) else f"{abs(c)}{mono}"
        parts.append(("-" if c < 0 else "+") + text)
    s = "".join(parts) or "0"
    return s[1:] if s.startswith("+") else s


def _free_companion(a, cfg):
    f = parse_poly(a.poly)
    try:
        e = companion_automorphism(f)
    except ValueError as exc:
        raise CliError(INVALID, "InvalidInput", str(exc)) from None
    m = abelianization_matrix(e)
    res = {"images": [str(w) for w in e.images], "text": str(e)}
    ev = {"abelianization": m.to_list(), "charpoly": str(char_poly(m)), "determinant": m.det()}
    return OK, res, ev


def _free_compare(a, cfg):
    e = parse_endo(_read_source(a.endo))
    u, v = parse_word(a.w1), parse_word(a.w2)
    for w in (u, v):
        if w.max_generator() > e.p:
            raise CliError(INVALID, "InvalidInput", f"word {w} uses a generator beyond x{e.p}")
    depth = a.depth if a.depth is not None else cfg.depth_cap
    if depth < 1:
        raise CliError(INVALID, "InvalidInput", "depth must be positive")
    try:
        order = InvariantOrder(e)
    except ValueError as exc:
        msg = str(exc)
        code = NEGATIVE if "not special" in msg else INVALID
        raise CliError(code, "Precondition" if code == NEGATIVE else "InvalidInput", msg) from None
    w = u.inverse() * v
    c = order.compare(u, v, depth)
    res = {"compare": c, "relation": {-1: "less", 0: "equal", 1: "greater"}[c]}
    ev = {"quotient": str(w), "depth": magnus_depth(w, depth), "depth_cap": depth,
          "charpoly": str(order.charpoly)}
    return OK, res, ev


def _free_verify(a, cfg):
    m = _matrix(a.matrix)
    if a.n < 1 or m.n**a.n > 1024:
        raise CliError(INVALID, "InvalidInput", f"tensor dimension {m.n}^{a.n} outside 1..1024")
    ok = verify_product_eigenvalues(m, a.n, cfg.eigen_tol)
    res = {"match": ok, "n": a.n, "dimension": m.n**a.n}
    ev = {"tolerance": cfg.eigen_tol, "method": "dense eigensolver with multiset matching"}
    return (OK if ok else NEGATIVE), res, ev


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="invorder", description="Invariant bi-orderings: exact checks and oracles.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--batch", metavar="FILE", help="run one command per line of FILE")
    p.add_argument("--jobs", type=int, default=None, help="worker processes for --batch")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("factor", help="factor over the rationals")
    s.add_argument("poly")
    s.set_defaults(handler=_factor, name="factor")

    s = sub.add_parser("roots", help="isolate real roots")
    s.add_argument("poly")
    s.add_argument("--range", help="open interval a,b; use inf for unbounded ends")
    s.set_defaults(handler=_roots, name="roots")

    s = sub.add_parser("special", help="test the special-polynomial condition")
    s.add_argument("poly")
    s.set_defaults(handler=_special, name="special")

    ab = sub.add_parser("abelian", help="orders on Z^n")
    absub = ab.add_subparsers(dest="action", parser_class=_Parser)
    s = absub.add_parser("check")
    s.add_argument("matrix")
    s.set_defaults(handler=_abelian_check, name="abelian check")
    s = absub.add_parser("sign")
    s.add_argument("matrix")
    s.add_argument("vector")
    s.set_defaults(handler=_abelian_sign, name="abelian sign")

    kn = sub.add_parser("knot", help="Alexander polynomial tools")
    knsub = kn.add_subparsers(dest="action", parser_class=_Parser)
    s = knsub.add_parser("verdict")
    s.add_argument("laurent")
    s.set_defaults(handler=_knot_verdict, name="knot verdict")
    s = knsub.add_parser("conway")
    s.add_argument("laurent")
    s.add_argument("--convention", choices=[c.value for c in Convention], default=Convention.STANDARD.value)
    s.set_defaults(handler=_knot_conway, name="knot conway")

    fr = sub.add_parser("free", help="free-group orders")
    frsub = fr.add_subparsers(dest="action", parser_class=_Parser)
    s = frsub.add_parser("companion")
    s.add_argument("poly")
    s.set_defaults(handler=_free_companion, name="free companion")
    s = frsub.add_parser("compare")
    s.add_argument("endo")
    s.add_argument("w1")
    s.add_argument("w2")
    s.add_argument("--depth", type=int, default=None, help=f"Magnus depth cap (default ${DEPTH_ENV} or 4)")
    s.set_defaults(handler=_free_compare, name="free compare")
    s = frsub.add_parser("verify-products")
    s.add_argument("matrix")
    s.add_argument("n", type=int)
    s.set_defaults(handler=_free_verify, name="free verify-products")
    return p


def _protect_negatives(argv: list[str]) -> list[str]:
    # "-x^3+..." would otherwise be taken for an option; a leading space keeps
    # it positional and every parser strips whitespace
    return [" " + a if a.startswith("-") and not a.startswith("--") and a != "-h" else a for a in argv]


def _input_echo(args) -> dict:
    skip = {"handler", "name", "command", "action", "json", "batch", "jobs"}
    return {k: v.strip() if isinstance(v, str) else v for k, v in vars(args).items() if k not in skip}


def run(argv: Sequence[str], environ=None) -> tuple[int, dict, bool]:
    """Execute one command; returns (exit code, report, json flag)."""
    argv = list(argv)
    want_json = "--json" in argv
    try:
        args = build_parser().parse_args(_protect_negatives(argv))
        if args.batch:
            raise CliError(INVALID, "UsageError", "--batch is only valid at the top level")
        if not hasattr(args, "handler"):
            raise CliError(INVALID, "UsageError", "missing subcommand")
        cfg = OrderConfig.from_env(environ)
    except (CliError, ValueError) as exc:
        kind = getattr(exc, "kind", "UsageError")
        return INVALID, {"command": None, "input": argv, "error": {"kind": kind, "message": str(exc)}}, want_json
    report = {"command": args.name, "input": _input_echo(args)}
    try:
        code, result, evidence = args.handler(args, cfg)
        report.update(result=result, evidence=evidence)
    except CliError as exc:
        code = exc.code
        report["error"] = {"kind": exc.kind, "message": str(exc)}
    except ParseError as exc:
        code = INVALID
        report["error"] = {"kind": "ParseError", "message": str(exc), "token": exc.token, "position": exc.pos}
    except NotAutomorphism as exc:
        code = INVALID
        report["error"] = {"kind": "NotAutomorphism", "message": str(exc)}
    except NoInvariantOrder as exc:
        code = NEGATIVE
        report["error"] = {"kind": "NoInvariantOrder", "message": str(exc)}
    except DepthExceeded as exc:
        code = DEPTH
        report["error"] = {"kind": "DepthExceeded", "message": str(exc)}
    report["exit_code"] = code
    return code, report, args.json or want_json


def run_line(line: str, environ=None) -> tuple[int, dict]:
    try:
        argv = shlex.split(line)
    except ValueError as exc:
        return INVALID, {"command": None, "input": line, "error": {"kind": "UsageError", "message": str(exc)},
                         "exit_code": INVALID}
    code, report, _ = run(argv, environ)
    return code, report


def _batch_lines(path: str) -> list[str]:
    with open(path, encoding="utf-8") as fh:
        return [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    pre = _Parser(add_help=False)
    pre.add_argument("--batch")
    pre.add_argument("--jobs", type=int, default=1)
    pre.add_argument("--json", action="store_true")
    try:
        known, rest = pre.parse_known_args(argv)
    except CliError as exc:
        known, rest = None, str(exc)
    if known is not None and known.batch:
        if rest:
            print(rep.dumps({"command": None, "input": argv, "error": {
                "kind": "UsageError", "message": "--batch takes no subcommand"}, "exit_code": INVALID}, True))
            return INVALID
        try:
            lines = _batch_lines(known.batch)
        except OSError as exc:
            print(rep.dumps({"command": None, "input": argv,
                             "error": {"kind": "InvalidInput", "message": str(exc)}, "exit_code": INVALID}, True))
            return INVALID
        if known.jobs and known.jobs > 1:
            with ProcessPoolExecutor(known.jobs) as ex:
                results = list(ex.map(run_line, lines))
        else:
            results = [run_line(ln) for ln in lines]
        for _, r in results:
            print(rep.dumps(r, compact=True))
        return max((c for c, _ in results), default=OK)
    code, report, as_json = run(argv)
    print(rep.dumps(report) if as_json else rep.render_text(report))
    return code
