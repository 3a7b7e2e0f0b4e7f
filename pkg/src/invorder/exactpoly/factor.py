"""Complete factorization of integer polynomials over the rationals.

Zassenhaus scheme: squarefree decomposition, rational-root stripping,
factorization modulo a small odd prime, multifactor Hensel lifting past a
Mignotte-type coefficient bound, then recombination of lifted factors by
increasing subset size. Exhausting the subsets certifies irreducibility.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import modular as zm
from .poly import IntPoly, RatPoly, squarefree_decomposition


@dataclass(frozen=True)
class Factorization:
    """``unit * prod(f ** m for f, m in factors)`` with monic irreducible ``f``."""

    unit: Fraction
    factors: tuple[tuple[RatPoly, int], ...]

    def expand(self) -> RatPoly:
        acc = RatPoly((self.unit,))
        for f, m in self.factors:
            acc = acc * f**m
        return acc

    def irreducibles(self) -> list[RatPoly]:
        return [f for f, _ in self.factors]

    def int_factors(self) -> list[tuple[IntPoly, int]]:
        return [(f.primitive(), m) for f, m in self.factors]

    def __str__(self):
        parts = []
        for f, m in self.factors:
            s = f"({f})"
            parts.append(s if m == 1 else f"{s}^{m}")
        if self.unit != 1 or not parts:
            parts.insert(0, str(self.unit))
        return "*".join(parts)


def factor_key(f: RatPoly):
    return (f.degree, f.coeffs)


def factor_rationals(a: IntPoly | RatPoly) -> Factorization:
    """Factor ``a`` into monic irreducibles over Q.

    >>> str(factor_rationals(IntPoly((-1, 0, 1))))
    '(x-1)*(x+1)'
    """
    if isinstance(a, RatPoly):
        unit = a.lc
        a = a.primitive()
    else:
        unit = Fraction(a.lc) if a.coeffs else 0
    if a.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    found: list[tuple[RatPoly, int]] = []
    for s, mult in squarefree_decomposition(a):
        for g in factor_squarefree(s):
            found.append((g.to_rat().monic(), mult))
    found.sort(key=lambda t: factor_key(t[0]))
    return Factorization(Fraction(unit), tuple(found))


def factor_squarefree(f: IntPoly) -> list[IntPoly]:
    """Primitive irreducible factors (positive leading coefficient) of a
    squarefree primitive polynomial."""
    f = f.primitive()
    out: list[IntPoly] = []
    if f.degree <= 0:
        return out
    if f[0] == 0:
        out.append(IntPoly((0, 1)))
        f = IntPoly(f.coeffs[1:])
    linear, f = _strip_rational_roots(f)
    out.extend(linear)
    if f.degree == 1:
        out.append(f)
    elif f.degree > 1:
        out.extend(zassenhaus(f))
    return out


_ROOT_SEARCH_LIMIT = 10**6


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _strip_rational_roots(f: IntPoly) -> tuple[list[IntPoly], IntPoly]:
    if f.degree < 2 or abs(f.lc) > _ROOT_SEARCH_LIMIT or abs(f[0]) > _ROOT_SEARCH_LIMIT:
        return [], f
    found = []
    for q in _divisors(f.lc):
        for p in _divisors(f[0]):
            for num in (p, -p):
                if math.gcd(num, q) != 1 or f.degree < 2:
                    continue
                if f(Fraction(num, q)) == 0:
                    lin = IntPoly((-num, q))
                    found.append(lin)
                    f = f.exact_div(lin).primitive()
    return found, f


def _choose_prime(f: IntPoly) -> int:
    p = 3
    while True:
        if f.lc % p and zm.is_squarefree(list(f.coeffs), p):
            return p
        p += 2
        while any(p % d == 0 for d in range(3, math.isqrt(p) + 1, 2)):
            p += 2


def coefficient_bound(f: IntPoly) -> int:
    """Bound on the absolute coefficients of any integer factor of f."""
    n = f.degree
    norm2 = math.isqrt(sum(c * c for c in f.coeffs)) + 1
    return 2**n * norm2


def zassenhaus(f: IntPoly) -> list[IntPoly]:
    """Irreducible factors of a squarefree primitive f with deg f >= 2."""
    p = _choose_prime(f)
    modfactors = zm.factor_squarefree(list(f.coeffs), p)
    if len(modfactors) == 1:
        return [f]
    lcf = f.lc
    bound = 2 * abs(lcf) * coefficient_bound(f)
    k = 1
    while p**k <= bound:
        k += 1
    pk = p**k
    lifted = hensel_lift(list(f.coeffs), modfactors, p, k)

    result = []
    remaining = lifted
    F = f
    s = 1
    while 2 * s <= len(remaining):
        for idx in combinations(range(len(remaining)), s):
            cand = [F.lc % pk]
            for i in idx:
                cand = zm.mul(cand, remaining[i], pk)
            g = IntPoly(zm.symmetric(cand, pk)).primitive()
            if g.degree > 0 and g.divides(F):
                result.append(g)
                F = F.exact_div(g)
                chosen = set(idx)
                remaining = [u for i, u in enumerate(remaining) if i not in chosen]
                break
        else:
            s += 1
    if F.degree > 0:
        result.append(F.primitive())
    return result


def _hensel_step(f, g, h, s, t, m):
    """Lift f = g h, s g + t h = 1 from modulus m to m^2 (h monic)."""
    mm = m * m
    e = zm.sub(f, zm.mul(g, h, mm), mm)
    q, r = zm.divmod_monic_or_unit(zm.mul(s, e, mm), h, mm)
    g2 = zm.add(g, zm.add(zm.mul(t, e, mm), zm.mul(q, g, mm), mm), mm)
    h2 = zm.add(h, r, mm)
    b = zm.sub(zm.add(zm.mul(s, g2, mm), zm.mul(t, h2, mm), mm), [1], mm)
    c, d = zm.divmod_monic_or_unit(zm.mul(s, b, mm), h2, mm)
    s2 = zm.sub(s, d, mm)
    t2 = zm.sub(zm.sub(t, zm.mul(t, b, mm), mm), zm.mul(c, g2, mm), mm)
    return g2, h2, s2, t2


def hensel_lift(f: list[int], factors: list[list[int]], p: int, k: int) -> list[list[int]]:
    """Lift f = lc(f) * prod(factors) mod p to monic factors mod p^k."""
    pk = p**k
    if len(factors) == 1:
        a = zm.reduce(f, pk)
        return [zm.scale(a, pow(a[-1], -1, pk), pk)]
    half = len(factors) // 2
    left, right = factors[:half], factors[half:]
    g = [f[-1] % p]
    for u in left:
        g = zm.mul(g, u, p)
    h = [1]
    for u in right:
        h = zm.mul(h, u, p)
    one, s, t = zm.ext_gcd(g, h, p)
    if one != [1]:
        raise ArithmeticError("modular factors are not coprime")
    m = p
    while m < pk:
        g, h, s, t = _hensel_step(f, g, h, s, t, m)
        m *= m
    g, h = zm.reduce(g, pk), zm.reduce(h, pk)
    return hensel_lift(g, left, p, k) + hensel_lift(h, right, p, k)
