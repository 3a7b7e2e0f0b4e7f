#!/usr/bin/env python3
"""Sort a sample of words by the invariant order of a companion automorphism.

    python3 scripts/free_order_demo.py --poly "x^3-3x-1" --count 12 --seed 7
"""
import argparse
import functools
import random

from invorder.cli.parsing import parse_poly
from invorder.config import OrderConfig
from invorder.freeord import (
    DepthExceeded,
    FreeWord,
    InvariantOrder,
    abelianization_matrix,
    commutator,
    companion_automorphism,
    magnus_depth,
    random_word,
    verify_product_eigenvalues,
)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--poly", default="x^3-3x-1")
    ap.add_argument("--count", type=int, default=12)
    ap.add_argument("--length", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--depth", type=int, default=None)
    args = ap.parse_args()
    cfg = OrderConfig.from_env(depth_cap=args.depth)

    theta = companion_automorphism(parse_poly(args.poly))
    order = InvariantOrder(theta)
    p = theta.p
    print("theta:", ", ".join(f"x{i + 1} -> {w}" for i, w in enumerate(theta.images)))
    m = abelianization_matrix(theta)
    for n in (2, 3):
        if p**n <= 1024:
            print(f"tensor power {n} eigenvalues are root products: {verify_product_eigenvalues(m, n, cfg.eigen_tol)}")

    rng = random.Random(args.seed)
    gens = [FreeWord.gen(i) for i in range(1, p + 1)]
    sample = [FreeWord(), commutator(gens[0], gens[1])]
    sample += [random_word(rng, p, args.length) for _ in range(args.count)]
    try:
        ranked = sorted(set(sample), key=functools.cmp_to_key(lambda u, v: order.compare(u, v, cfg.depth_cap)))
    except DepthExceeded as exc:
        raise SystemExit(f"depth cap {cfg.depth_cap} too small: {exc}")
    for w in ranked:
        d = magnus_depth(w, cfg.depth_cap)
        print(f"  depth {d if d is not None else '-'}  {w}")


if __name__ == "__main__":
    main()
