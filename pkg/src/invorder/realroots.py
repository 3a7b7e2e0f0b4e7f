"""Sturm-sequence root counting and isolation, and real algebraic numbers
held as (minimal polynomial, isolating interval) pairs with rational endpoints."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from .exactpoly import IntPoly, RatPoly, factor_rationals, squarefree_part

Endpoint = Optional[Union[int, Fraction, float]]


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _as_intpoly(f) -> IntPoly:
    if isinstance(f, RatPoly):
        return f.primitive()
    if isinstance(f, IntPoly):
        return f
    return IntPoly(f)


@lru_cache(maxsize=4096)
def sturm_sequence(f: IntPoly) -> tuple[IntPoly, ...]:
    """Sturm chain of the squarefree part of f, each member scaled by a
    positive rational to a primitive integer polynomial."""
    f = squarefree_part(f)
    seq = [f, f.derivative().to_rat().primitive()]
    while seq[-1].degree > 0:
        r = seq[-2].to_rat() % seq[-1].to_rat()
        if r.is_zero():
            break
        seq.append((-r).primitive())
    return tuple(p for p in seq if not p.is_zero())


def _variations(seq, t) -> int:
    if t == math.inf or t == -math.inf:
        signs = []
        for p in seq:
            s = _sign(p.lc)
            if t < 0 and p.degree % 2:
                s = -s
            signs.append(s)
    else:
        signs = [_sign(p(t)) for p in seq]
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _endpoint(t: Endpoint, default: float):
    if t is None:
        return default
    if isinstance(t, float):
        if math.isinf(t):
            return t
        return Fraction(t)
    return Fraction(t)


def count_real_roots(f: IntPoly, lo: Endpoint = None, hi: Endpoint = None) -> int:
    """Number of distinct real roots of f in the open interval (lo, hi).

    ``None`` or an infinite float stands for the corresponding infinity.
    """
    f = _as_intpoly(f)
    if f.is_zero():
        raise ValueError("root count of the zero polynomial")
    a, b = _endpoint(lo, -math.inf), _endpoint(hi, math.inf)
    if not a < b:
        return 0
    seq = sturm_sequence(f)
    n = _variations(seq, a) - _variations(seq, b)
    if b != math.inf and f(b) == 0:
        n -= 1
    return n


def count_roots_closed(f: IntPoly, lo: Fraction, hi: Fraction) -> int:
    """Distinct roots in [lo, hi]."""
    f = _as_intpoly(f)
    if lo == hi:
        return int(f(lo) == 0)
    seq = sturm_sequence(f)
    return _variations(seq, lo) - _variations(seq, hi) + int(f(lo) == 0)


def cauchy_bound(f: IntPoly) -> Fraction:
    """Every complex root has modulus strictly below this bound."""
    lc = abs(f.lc)
    return 1 + Fraction(max((abs(c) for c in f.coeffs[:-1]), default=0), lc)


@dataclass(frozen=True)
class IsolatingInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError("empty interval")

    @classmethod
    def point(cls, q) -> "IsolatingInterval":
        return cls(q, q)

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, t) -> bool:
        return self.lo <= t <= self.hi

    def __mul__(self, other: "IsolatingInterval") -> "IsolatingInterval":
        ps = [self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi]
        return IsolatingInterval(min(ps), max(ps))

    def __str__(self):
        if self.is_point:
            return _fmt(self.lo)
        return f"[{_fmt(self.lo)}, {_fmt(self.hi)}]"


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _step_clear(f, c, side, span):
    """Largest eps = span/2^j with no root of f in (c-eps, c) (side=-1) or
    (c, c+eps) (side=+1), and c±eps not a root."""
    eps = span
    while True:
        t = c + side * eps
        lo, hi = (t, c) if side < 0 else (c, t)
        if f(t) != 0 and count_real_roots(f, lo, hi) == 0:
            return t
        eps /= 2


def isolate_real_roots(f: IntPoly) -> list[IsolatingInterval]:
    """Sorted disjoint isolating intervals, one per distinct real root.

    Non-degenerate intervals have endpoints that are not roots of f.
    """
    f = _as_intpoly(f)
    if f.is_zero():
        raise ValueError("root isolation of the zero polynomial")
    g = squarefree_part(f)
    if g.degree <= 0:
        return []
    if g.degree == 1:
        return [IsolatingInterval.point(Fraction(-g[0], g[1]))]
    m = cauchy_bound(g)
    out: list[IsolatingInterval] = []
    stack = [(-m, m)]
    while stack:
        lo, hi = stack.pop()
        n = count_real_roots(g, lo, hi)
        if n == 0:
            continue
        if n == 1:
            out.append(IsolatingInterval(lo, hi))
            continue
        mid = (lo + hi) / 2
        if g(mid) == 0:
            out.append(IsolatingInterval.point(mid))
            quarter = (hi - lo) / 4
            stack.append((_step_clear(g, mid, 1, quarter), hi))
            stack.append((lo, _step_clear(g, mid, -1, quarter)))
        else:
            stack.append((mid, hi))
            stack.append((lo, mid))
    out.sort(key=lambda iv: iv.lo)
    for i in range(len(out) - 1):
        while out[i].hi >= out[i + 1].lo:
            out[i], out[i + 1] = _halve(g, out[i]), _halve(g, out[i + 1])
    return out


def _halve(g: IntPoly, iv: IsolatingInterval) -> IsolatingInterval:
    """The half of iv that holds its root."""
    if iv.is_point:
        return iv
    mid = iv.mid
    if g(mid) == 0:
        return IsolatingInterval.point(mid)
    if count_real_roots(g, iv.lo, mid):
        return IsolatingInterval(iv.lo, mid)
    return IsolatingInterval(mid, iv.hi)


@dataclass(frozen=True, eq=False)
class RealAlgebraic:
    """A real algebraic number: a primitive irreducible ``minpoly`` with
    positive leading coefficient and an interval holding exactly one of its roots.

    Linear minimal polynomials always carry an exact point interval.
    """

    minpoly: IntPoly
    interval: IsolatingInterval

    @classmethod
    def rational(cls, q) -> "RealAlgebraic":
        q = Fraction(q)
        return cls(IntPoly((-q.numerator, q.denominator)), IsolatingInterval.point(q))

    @classmethod
    def from_root(cls, f: IntPoly, interval: IsolatingInterval) -> "RealAlgebraic":
        """The root of f isolated by ``interval``, re-expressed through its
        irreducible factor."""
        f = _as_intpoly(f)
        if interval.is_point:
            return cls.rational(interval.lo)
        hits = []
        for g in factor_rationals(f).irreducibles():
            g = g.primitive()
            if count_roots_closed(g, interval.lo, interval.hi):
                hits.append(g)
        if len(hits) != 1:
            raise ValueError(f"{interval} does not isolate a single root of {f}")
        g = hits[0]
        if g.degree == 1:
            return cls.rational(Fraction(-g[0], g[1]))
        return cls(g, interval)

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    @property
    def is_rational(self) -> bool:
        return self.interval.is_point

    def refine(self, width) -> "RealAlgebraic":
        return refine(self, width)

    def sign(self) -> int:
        return sign_of_poly_at(IntPoly((0, 1)), self)

    def __float__(self):
        return float(self.refine(Fraction(1, 10**17)).interval.mid)

    def approx(self, digits: int = 12) -> str:
        q = self.refine(Fraction(1, 10 ** (digits + 2))).interval.mid
        return f"{float(q):.{digits}g}"

    def __eq__(self, other):
        if not isinstance(other, RealAlgebraic):
            return NotImplemented
        if self.minpoly != other.minpoly:
            return False
        lo = max(self.interval.lo, other.interval.lo)
        hi = min(self.interval.hi, other.interval.hi)
        return lo <= hi and count_roots_closed(self.minpoly, lo, hi) > 0

    def __hash__(self):
        return hash(self.minpoly)

    def compare(self, other: "RealAlgebraic") -> int:
        if self == other:
            return 0
        a, b = self, other
        while True:
            if a.interval.hi < b.interval.lo:
                return -1
            if b.interval.hi < a.interval.lo:
                return 1
            a = refine(a, a.interval.width / 2) if not a.is_rational else a
            b = refine(b, b.interval.width / 2) if not b.is_rational else b

    def __lt__(self, other):
        return self.compare(other) < 0

    def __str__(self):
        if self.is_rational:
            return _fmt(self.interval.lo)
        return f"root of {self.minpoly} in {self.interval}"


def refine(a: RealAlgebraic, width) -> RealAlgebraic:
    """Bisect until the isolating interval has width at most ``width``."""
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    iv = a.interval
    if iv.is_point or iv.width <= width:
        return a
    g = a.minpoly
    lo, hi = iv.lo, iv.hi
    slo = _sign(g(lo))
    while hi - lo > width:
        mid = (lo + hi) / 2
        sm = _sign(g(mid))
        if sm == 0:
            return RealAlgebraic(g, IsolatingInterval.point(mid))
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return RealAlgebraic(g, IsolatingInterval(lo, hi))


def real_roots(f: IntPoly) -> list[RealAlgebraic]:
    """Distinct real roots of f in increasing order."""
    f = _as_intpoly(f)
    return [RealAlgebraic.from_root(f, iv) for iv in isolate_real_roots(f)]


def sign_of_poly_at(g: RatPoly | IntPoly, a: RealAlgebraic) -> int:
    """Exact sign of g(a): reduce g modulo the minimal polynomial, then refine
    until the remainder has no root in the interval."""
    g = g.to_rat() if isinstance(g, IntPoly) else RatPoly(g.coeffs)
    if a.is_rational:
        return _sign(g(a.interval.lo))
    r = g % a.minpoly.to_rat()
    if r.is_zero():
        return 0
    r = r.primitive()
    if r.degree == 0:
        return _sign(r.lc)
    cur = a
    while count_roots_closed(r, cur.interval.lo, cur.interval.hi):
        cur = refine(cur, cur.interval.width / 2)
    return _sign(r(cur.interval.lo))
