#!/usr/bin/env python3
"""Check positivity of a Galois conjugate for every root product of bounded weight.

For each product of a nonempty subset of the base polynomials, every exponent
vector over its real roots with total weight <= --weight is tested, and the
positive witness is printed as (minimal polynomial, isolating interval).

    python3 scripts/root_product_survey.py --weight 2 --jobs 4
"""
import argparse
import itertools
import time
from concurrent.futures import ProcessPoolExecutor

from invorder.cli.parsing import parse_poly
from invorder.config import OrderConfig
from invorder.exactpoly import IntPoly
from invorder.realroots import real_roots
from invorder.specialgal import check_root_product_positive

BASE = ["x^3-3x-1", "x^3+x^2-2x-1", "x^3+2x^2-x-1", "x-1"]


def survey(args):
    f, weight, digits = args
    n = len(real_roots(f))
    rows = []
    for w in range(weight + 1):
        for combo in itertools.combinations_with_replacement(range(n), w):
            exps = [combo.count(i) for i in range(n)]
            ok, wit = check_root_product_positive(f, exps)
            rows.append((exps, ok, None if wit is None else (str(wit.minpoly), wit.approx(digits))))
    return f, rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--weight", type=int, default=3)
    ap.add_argument("--base", nargs="+", default=BASE, help="base polynomials in x")
    ap.add_argument("--jobs", type=int, default=None)
    ap.add_argument("--quiet", action="store_true", help="print one summary line per polynomial")
    args = ap.parse_args()
    cfg = OrderConfig.from_env(jobs=args.jobs)

    base = [parse_poly(b) for b in args.base]
    corpus = []
    for r in range(1, len(base) + 1):
        for sub in itertools.combinations(base, r):
            f = IntPoly((1,))
            for g in sub:
                f = f * g
            corpus.append(f)
    tasks = [(f, args.weight, min(cfg.approx_digits, 10)) for f in corpus]

    start = time.perf_counter()
    if cfg.jobs > 1:
        with ProcessPoolExecutor(cfg.jobs) as pool:
            results = list(pool.map(survey, tasks))
    else:
        results = [survey(t) for t in tasks]

    total = failures = 0
    for f, rows in results:
        bad = [r for r in rows if not r[1]]
        total += len(rows)
        failures += len(bad)
        print(f"{str(f):40s} {len(rows):4d} vectors, {len(bad)} without witness")
        if not args.quiet:
            for exps, ok, wit in rows:
                shown = "none" if wit is None else f"{wit[0]}  ~ {wit[1]}"
                print(f"    {exps}  {'ok ' if ok else 'BAD'} {shown}")
    print(f"{total} vectors, {failures} failures, {time.perf_counter() - start:.1f} s")


if __name__ == "__main__":
    main()
