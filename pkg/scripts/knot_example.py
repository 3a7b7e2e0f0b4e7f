#!/usr/bin/env python3
"""Screen a fibred-knot Alexander polynomial and print the full evidence.

    python3 scripts/knot_example.py
    python3 scripts/knot_example.py -- "-x+3-x^-1"
"""
import argparse

from invorder.cli.parsing import parse_laurent
from invorder.cli.report import ascending
from invorder.knotcheck import Convention, conway_from_alexander, orderability_verdict
from invorder.realroots import real_roots

DEFAULT = "-x^3-3x^2+x+7+x^-1-3x^-2-x^-3"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("alexander", nargs="?", default=DEFAULT)
    args = ap.parse_args()

    lp = parse_laurent(args.alexander)
    v = orderability_verdict(lp)
    print(f"Alexander polynomial : {lp}")
    for conv in Convention:
        try:
            print(f"{'Conway ' + conv.value:21s}: {ascending(conway_from_alexander(lp, conv), 'z')}")
        except ValueError as exc:
            print(f"{'Conway ' + conv.value:21s}: unavailable ({exc})")
    print(f"verdict              : {v.kind.value}")
    if v.factorization is None:
        print("failures             : " + "; ".join(v.notes or v.check.failures))
        return
    print(f"factorization        : {v.factorization}")
    for g, cond in v.special.per_factor:
        roots = ", ".join(r.approx(8) for r in real_roots(g))
        print(f"  {str(g):24s} {cond.value:40s} real roots: {roots}")
    print(f"real / positive roots: {v.real_roots} / {v.positive_roots} of {v.distinct_roots}")
    for note in v.notes:
        print(f"note                 : {note}")


if __name__ == "__main__":
    main()
