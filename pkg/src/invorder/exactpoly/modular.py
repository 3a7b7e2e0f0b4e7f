"""Polynomials over Z/m as plain coefficient lists (low to high), and
factorization over F_p for odd primes p."""
from __future__ import annotations

import random


def trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def reduce(a, m: int) -> list[int]:
    return trim([c % m for c in a])


def symmetric(a, m: int) -> list[int]:
    """Representatives in (-m/2, m/2]."""
    half = m // 2
    return [c - m if c > half else c for c in (v % m for v in a)]


def add(a, b, m: int) -> list[int]:
    n = max(len(a), len(b))
    return trim([((a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0)) % m for k in range(n)])


def sub(a, b, m: int) -> list[int]:
    n = max(len(a), len(b))
    return trim([((a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0)) % m for k in range(n)])


def mul(a, b, m: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return reduce(out, m)


def scale(a, c: int, m: int) -> list[int]:
    return reduce([c * v for v in a], m)


def divmod_monic_or_unit(a, b, m: int) -> tuple[list[int], list[int]]:
    """Division with remainder; the leading coefficient of b must be a unit mod m."""
    b = reduce(b, m)
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    inv = pow(b[-1], -1, m)
    r = reduce(a, m)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], r
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k] * inv % m
        if c:
            q[k - db] = c
            for j, bj in enumerate(b):
                r[k - db + j] = (r[k - db + j] - c * bj) % m
    return trim(q), trim(r[:db])


def rem(a, b, m: int) -> list[int]:
    return divmod_monic_or_unit(a, b, m)[1]


def monic(a, p: int) -> list[int]:
    if not a:
        return a
    return scale(a, pow(a[-1], -1, p), p)


def gcd(a, b, p: int) -> list[int]:
    a, b = reduce(a, p), reduce(b, p)
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def ext_gcd(a, b, p: int) -> tuple[list[int], list[int], list[int]]:
    """(g, s, t) with s*a + t*b = g monic."""
    r0, r1 = reduce(a, p), reduce(b, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = divmod_monic_or_unit(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    return scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)


def powmod(a, e: int, f, p: int) -> list[int]:
    result = [1]
    base = rem(a, f, p)
    while e:
        if e & 1:
            result = rem(mul(result, base, p), f, p)
        base = rem(mul(base, base, p), f, p)
        e >>= 1
    return result


def derivative(a, p: int) -> list[int]:
    return reduce([k * c for k, c in enumerate(a)][1:], p)


def is_squarefree(a, p: int) -> bool:
    a = reduce(a, p)
    d = derivative(a, p)
    if not d:
        return False
    return len(gcd(a, d, p)) == 1


def distinct_degree(f, p: int) -> list[tuple[list[int], int]]:
    """Split monic squarefree f into products of irreducibles of equal degree."""
    out = []
    h = [0, 1]
    d = 0
    f = list(f)
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = powmod(h, p, f, p)
        g = gcd(f, sub(h, [0, 1], p), p)
        if len(g) > 1:
            out.append((g, d))
            f = divmod_monic_or_unit(f, g, p)[0]
            h = rem(h, f, p)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def equal_degree(f, d: int, p: int, rng: random.Random) -> list[list[int]]:
    """Cantor-Zassenhaus splitting of monic squarefree f whose irreducible
    factors all have degree d. Needs p odd."""
    n = len(f) - 1
    if n == d:
        return [f]
    e = (p**d - 1) // 2
    while True:
        a = trim([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        g = gcd(a, f, p)
        if 1 < len(g) < len(f):
            break
        b = sub(powmod(a, e, f, p), [1], p)
        g = gcd(b, f, p)
        if 1 < len(g) < len(f):
            break
    other = divmod_monic_or_unit(f, g, p)[0]
    return equal_degree(g, d, p, rng) + equal_degree(other, d, p, rng)


def factor_squarefree(f, p: int) -> list[list[int]]:
    """Monic irreducible factors of a squarefree polynomial over F_p, sorted."""
    if p == 2:
        raise ValueError("odd prime required")
    f = monic(reduce(f, p), p)
    rng = random.Random(p * 1000003 + len(f))
    out = []
    for g, d in distinct_degree(f, p):
        out.extend(equal_degree(g, d, p, rng))
    out.sort(key=lambda q: (len(q), q))
    return out
