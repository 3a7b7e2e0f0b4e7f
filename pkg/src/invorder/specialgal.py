"""Special polynomials and exact products of their roots.

A monic f is special when every monic irreducible factor either has odd
prime power degree, negative constant term and only real roots, or has only
positive real roots. For such f every product of roots has a positive real
Galois conjugate; :func:`check_root_product_positive` verifies that claim
per instance with exact arithmetic.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping, Sequence

from .exactpoly import Factorization, IntPoly, RatPoly, factor_rationals, resultant
from .realroots import (
    IsolatingInterval,
    RealAlgebraic,
    count_real_roots,
    count_roots_closed,
    real_roots,
    refine,
)


class Condition(enum.Enum):
    ODD_PRIME_POWER_REAL_NEG_CONST = "odd-prime-power-real-negative-constant"
    ALL_ROOTS_POSITIVE = "all-roots-positive"
    FAILS = "fails"


@dataclass(frozen=True)
class SpecialVerdict:
    is_special: bool
    per_factor: tuple[tuple[RatPoly, Condition], ...]
    factorization: Factorization


def odd_prime_power(d: int) -> bool:
    """d = q^k with q an odd prime and k >= 1."""
    if d < 3 or d % 2 == 0:
        return False
    q = 3
    while q * q <= d:
        if d % q == 0:
            break
        q += 2
    else:
        return True
    while d % q == 0:
        d //= q
    return d == 1


def normalize_unit_lead(f: IntPoly) -> IntPoly:
    """Clear the content and a leading -1; reject other leading coefficients."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    p = f.primitive()
    if p.lc != 1:
        raise ValueError(f"leading coefficient of {f} is not a unit after clearing content")
    return p


def classify_factor(g: IntPoly) -> Condition:
    """Which defining condition a monic irreducible factor meets (the first
    listed wins when both hold)."""
    d = g.degree
    if odd_prime_power(d) and g[0] < 0 and count_real_roots(g) == d:
        return Condition.ODD_PRIME_POWER_REAL_NEG_CONST
    if count_real_roots(g, 0, None) == d:
        return Condition.ALL_ROOTS_POSITIVE
    return Condition.FAILS


def is_special(f: IntPoly) -> SpecialVerdict:
    f = normalize_unit_lead(f)
    fac = factor_rationals(f)
    per = tuple((g, classify_factor(g.to_int())) for g in fac.irreducibles())
    ok = all(c is not Condition.FAILS for _, c in per)
    return SpecialVerdict(ok, per, fac)


def has_positive_real_root(g: IntPoly) -> bool:
    if g.is_zero():
        raise ValueError("zero polynomial")
    return count_real_roots(g, 0, None) >= 1


def _interpolate(values: Sequence) -> RatPoly:
    """Polynomial through (k, values[k]), k = 0..len-1 (Newton form)."""
    n = len(values)
    coef = [Fraction(v) for v in values]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / j
    acc = RatPoly(())
    for i in range(n - 1, -1, -1):
        acc = acc * RatPoly((-i, 1)) + coef[i]
    return acc


def eliminate(a: IntPoly, b_at: Callable[[int], IntPoly], degree: int) -> IntPoly:
    """R(x) = Res_y(a(y), b_x(y)) recovered by interpolation from ``degree + 1``
    integer specializations of x. The y-leading coefficient of b_x must not
    depend on x."""
    vals = [resultant(a, b_at(x0)) for x0 in range(degree + 1)]
    return _interpolate(vals).primitive()


def product_elimination(a: IntPoly, b: IntPoly) -> IntPoly:
    """Polynomial vanishing at every product of a root of a and a root of b:
    Res_y(a(y), y^deg(b) b(x/y)). Requires b(0) != 0."""
    m = b.degree

    def b_at(x0: int) -> IntPoly:
        return IntPoly(b[i] * x0**i for i in range(m, -1, -1))

    return eliminate(a, b_at, a.degree * m)


def power_elimination(a: IntPoly, k: int) -> IntPoly:
    """Res_y(a(y), x - y^k): vanishes at the k-th powers of the roots of a."""
    def b_at(x0: int) -> IntPoly:
        return IntPoly([x0] + [0] * (k - 1) + [-1])

    return eliminate(a, b_at, a.degree)


def _select(elim: IntPoly, step: Callable[[int], tuple]) -> RealAlgebraic:
    """Shrink the enclosing interval until exactly one irreducible factor of
    ``elim`` has exactly one root inside it."""
    facs = [g.primitive() for g in factor_rationals(elim).irreducibles()]
    j = 0
    while True:
        lo, hi = step(j)
        hits = [(g, count_roots_closed(g, lo, hi)) for g in facs]
        hits = [(g, n) for g, n in hits if n]
        if len(hits) == 1 and hits[0][1] == 1:
            g = hits[0][0]
            if g.degree == 1:
                return RealAlgebraic.rational(Fraction(-g[0], g[1]))
            return RealAlgebraic(g, IsolatingInterval(lo, hi))
        j += 1


@lru_cache(maxsize=8192)
def minpoly_product(a: RealAlgebraic, b: RealAlgebraic) -> RealAlgebraic:
    """The product a*b as a real algebraic number."""
    if a.is_rational and b.is_rational:
        return RealAlgebraic.rational(a.interval.lo * b.interval.lo)
    if (a.is_rational and a.interval.lo == 0) or (b.is_rational and b.interval.lo == 0):
        return RealAlgebraic.rational(0)
    if a.is_rational and a.interval.lo == 1:
        return b
    if b.is_rational and b.interval.lo == 1:
        return a
    elim = product_elimination(a.minpoly, b.minpoly)
    state = [a, b]

    def step(j: int):
        if j:
            state[0] = _halve(state[0])
            state[1] = _halve(state[1])
        iv = state[0].interval * state[1].interval
        return iv.lo, iv.hi

    return _select(elim, step)


def _halve(a: RealAlgebraic) -> RealAlgebraic:
    if a.is_rational:
        return a
    return refine(a, a.interval.width / 2)


def minpoly_power(a: RealAlgebraic, k: int) -> RealAlgebraic:
    """a**k; k = 0 gives 1."""
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    if k == 0:
        return RealAlgebraic.rational(1)
    if k == 1:
        return a
    if a.is_rational:
        return RealAlgebraic.rational(a.interval.lo**k)
    elim = power_elimination(a.minpoly, k)
    state = [a]

    def step(j: int):
        if j:
            state[0] = _halve(state[0])
        iv = state[0].interval
        ps = [iv.lo**k, iv.hi**k]
        lo, hi = min(ps), max(ps)
        if iv.lo < 0 < iv.hi and k % 2 == 0:
            lo = Fraction(0)
        return lo, hi

    return _select(elim, step)


def positive_witness(a: RealAlgebraic) -> RealAlgebraic | None:
    """a itself when positive, else the smallest positive Galois conjugate,
    refined so the interval lies inside (0, inf)."""
    if a.sign() > 0:
        w = a
    else:
        pos = [r for r in real_roots(a.minpoly) if r.sign() > 0]
        if not pos:
            return None
        w = pos[0]
    while w.interval.lo <= 0:
        w = _halve(w)
    return w


def root_product(f: IntPoly, exponents: Sequence[int] | Mapping[int, int]) -> RealAlgebraic:
    """prod(root_i ** e_i) over the distinct real roots of f in increasing order."""
    roots = real_roots(f)
    if isinstance(exponents, Mapping):
        items = exponents.items()
    else:
        if len(exponents) > len(roots):
            raise IndexError("more exponents than real roots")
        items = enumerate(exponents)
    acc = RealAlgebraic.rational(1)
    for i, e in items:
        if not 0 <= i < len(roots):
            raise IndexError(f"root index {i} out of range")
        if e < 0:
            raise ValueError("exponents must be nonnegative")
        if e:
            acc = minpoly_product(acc, minpoly_power(roots[i], e))
    return acc


def check_root_product_positive(
    f: IntPoly, exponents: Sequence[int] | Mapping[int, int]
) -> tuple[bool, RealAlgebraic | None]:
    """Form the root product and report whether some Galois conjugate of it
    is a positive real, with that conjugate as witness."""
    verdict = is_special(f)
    if not verdict.is_special:
        raise ValueError(f"{f} is not special")
    alpha = root_product(normalize_unit_lead(f), exponents)
    w = positive_witness(alpha)
    return w is not None, w
