"""
Dense univariate polynomials with exact coefficients.

Coefficients are stored low to high, so ``IntPoly((1, 0, -2))`` is ``1 - 2x^2``.
The zero polynomial has an empty coefficient tuple and degree -1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


def _trim(coeffs: Iterable) -> tuple:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _format(coeffs: Sequence[Number], var: str, exps: Sequence[int]) -> str:
    parts = []
    for c, e in sorted(zip(coeffs, exps), key=lambda t: -t[1]):
        if c == 0:
            continue
        neg = c < 0
        a = -c if neg else c
        if e == 0:
            mono = str(a)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            if a != 1:
                mono = f"{a}*{mono}" if isinstance(a, Fraction) and a.denominator != 1 else f"{a}{mono}"
        parts.append(("-" if neg else "+") + mono)
    if not parts:
        return "0"
    s = "".join(parts)
    return s[1:] if s[0] == "+" else s


class _DensePoly:
    """Arithmetic shared by integer and rational polynomials."""

    coeffs: tuple

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim(self._coerce(c) for c in coeffs))

    @staticmethod
    def _coerce(c):
        raise NotImplementedError

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, c, k: int):
        return cls([0] * k + [c])

    # basic queries

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"{type(self).__name__}('{self}')"

    def __str__(self):
        return self.format("x")

    def format(self, var: str = "x") -> str:
        return _format(self.coeffs, var, range(len(self.coeffs)))

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self):
        return type(self)(k * c for k, c in enumerate(self.coeffs) if k > 0)

    # arithmetic

    def _other(self, other):
        if isinstance(other, _DensePoly):
            return other
        if isinstance(other, (int, Fraction)):
            return type(self)((other,)) if isinstance(other, int) else RatPoly((other,))
        return NotImplemented

    def _result_type(self, other):
        return RatPoly if RatPoly in (type(self), type(other)) else type(self)

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return self._result_type(other)(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return type(self)(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._result_type(other)(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return self._result_type(other)(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = type(self)((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def compose(self, inner):
        acc = type(inner)(())
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shift_degree(self, k: int):
        return type(self)([0] * k + list(self.coeffs)) if self.coeffs else self

    def reverse(self):
        """x^deg * p(1/x)."""
        return type(self)(reversed(self.coeffs))

    def scale_var(self, s):
        """p(s*x)."""
        return self._result_type(self._other(s))(c * s**k for k, c in enumerate(self.coeffs))


@dataclass(frozen=True, eq=True, init=False, repr=False)
class RatPoly(_DensePoly):
    coeffs: tuple

    @staticmethod
    def _coerce(c):
        return Fraction(c)

    def __hash__(self):
        return hash(("RatPoly", self.coeffs))

    def __eq__(self, other):
        if isinstance(other, _DensePoly):
            return self.coeffs == tuple(Fraction(c) for c in other.coeffs)
        return NotImplemented

    def monic(self) -> "RatPoly":
        if not self.coeffs:
            return self
        lc = self.lc
        return RatPoly(c / lc for c in self.coeffs)

    def __divmod__(self, other):
        other = self._other(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = other.degree
        lb = Fraction(other.lc)
        q = [Fraction(0)] * max(len(r) - db, 0)
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k] / lb
            if c:
                q[k - db] = c
                for j, bj in enumerate(other.coeffs):
                    r[k - db + j] -= c * bj
        return RatPoly(q), RatPoly(r[:db] if db > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def primitive(self) -> "IntPoly":
        """Integer polynomial with the same roots: cleared denominators, content removed,
        sign kept (the positive multiplier preserves sign)."""
        if not self.coeffs:
            return IntPoly(())
        den = math.lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = math.gcd(*ints)
        return IntPoly(v // g for v in ints)

    def to_int(self) -> "IntPoly":
        if any(c.denominator != 1 for c in self.coeffs):
            raise ValueError(f"{self} has non-integer coefficients")
        return IntPoly(int(c) for c in self.coeffs)


@dataclass(frozen=True, eq=True, init=False, repr=False)
class IntPoly(_DensePoly):
    coeffs: tuple

    @staticmethod
    def _coerce(c):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise ValueError(f"non-integer coefficient {c}")
            return int(c)
        if isinstance(c, bool) or not isinstance(c, int):
            c = int(c)
        return c

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, RatPoly):
            return other == self
        return NotImplemented

    def to_rat(self) -> RatPoly:
        return RatPoly(self.coeffs)

    def content(self) -> int:
        """Gcd of the coefficients, carrying the sign of the leading coefficient."""
        if not self.coeffs:
            return 0
        g = math.gcd(*self.coeffs)
        return -g if self.lc < 0 else g

    def primitive(self) -> "IntPoly":
        """Primitive part with positive leading coefficient."""
        if not self.coeffs:
            return self
        c = self.content()
        return IntPoly(v // c for v in self.coeffs)

    def exact_div(self, other: "IntPoly | int") -> "IntPoly":
        """Quotient of an exact division over the integers; raises if inexact."""
        if isinstance(other, int):
            if any(v % other for v in self.coeffs):
                raise ArithmeticError("inexact division")
            return IntPoly(v // other for v in self.coeffs)
        q, r = divmod(self.to_rat(), other.to_rat())
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q.to_int()

    def divides(self, other: "IntPoly") -> bool:
        if not self.coeffs:
            return not other.coeffs
        return not (other.to_rat() % self.to_rat())

    def pseudo_rem(self, other: "IntPoly") -> "IntPoly":
        """lc(other)^(deg self - deg other + 1) * self mod other, computed over Z."""
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        db = other.degree
        delta = self.degree - db
        if delta < 0:
            return self
        lb = other.lc
        r = list(self.coeffs)
        steps = 0
        while r and len(r) - 1 >= db:
            lr = r[-1]
            k = len(r) - 1 - db
            r = [lb * v for v in r]
            for j, bj in enumerate(other.coeffs):
                r[k + j] -= lr * bj
            r = list(_trim(r))
            steps += 1
        scale = lb ** (delta + 1 - steps)
        return IntPoly(scale * v for v in r)

    def max_norm(self) -> int:
        return max((abs(c) for c in self.coeffs), default=0)


@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial ``sum coeffs[k] x^(min_exp + k)``."""

    min_exp: int
    coeffs: tuple

    def __post_init__(self):
        cs = [int(c) for c in self.coeffs]
        lo = 0
        while lo < len(cs) and cs[lo] == 0:
            lo += 1
        cs = list(_trim(cs[lo:]))
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "min_exp", self.min_exp + lo if cs else 0)

    @classmethod
    def from_dict(cls, terms: dict[int, int]) -> "LaurentPoly":
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls(0, ())
        lo, hi = min(terms), max(terms)
        return cls(lo, tuple(terms.get(e, 0) for e in range(lo, hi + 1)))

    @classmethod
    def from_intpoly(cls, p: IntPoly, shift: int = 0) -> "LaurentPoly":
        return cls(shift, p.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def max_exp(self) -> int:
        return self.min_exp + len(self.coeffs) - 1

    @property
    def span(self) -> int:
        return len(self.coeffs) - 1

    def terms(self) -> dict[int, int]:
        return {self.min_exp + k: c for k, c in enumerate(self.coeffs) if c}

    def __str__(self):
        if not self.coeffs:
            return "0"
        return _format(self.coeffs, "x", range(self.min_exp, self.max_exp + 1))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        t = self.terms()
        for e, c in other.terms().items():
            t[e] = t.get(e, 0) + c
        return LaurentPoly.from_dict(t)

    def __neg__(self):
        return LaurentPoly(self.min_exp, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(self.min_exp, tuple(c * other for c in self.coeffs))
        p = IntPoly(self.coeffs) * IntPoly(other.coeffs)
        return LaurentPoly(self.min_exp + other.min_exp, p.coeffs)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by x^k."""
        return LaurentPoly(self.min_exp + k, self.coeffs)

    def invert_variable(self) -> "LaurentPoly":
        """a(x^-1)."""
        return LaurentPoly(-self.max_exp, tuple(reversed(self.coeffs)))

    def __call__(self, t):
        return sum(c * Fraction(t) ** (self.min_exp + k) for k, c in enumerate(self.coeffs) if c)

    def value_at_one(self) -> int:
        return sum(self.coeffs)

    def to_intpoly(self) -> IntPoly:
        """x^(-min_exp) * self as an ordinary polynomial."""
        return IntPoly(self.coeffs)


def _as_int(p) -> IntPoly:
    if isinstance(p, IntPoly):
        return p
    if isinstance(p, RatPoly):
        return p.primitive()
    return IntPoly(p)


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient; gcd(0, 0) = 0."""
    a, b = _as_int(a), _as_int(b)
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = a.pseudo_rem(b)
        a, b = b, (r.primitive() if r else r)
    return a.primitive()


def resultant(a: IntPoly, b: IntPoly) -> int:
    """Res(a, b) = lc(a)^deg(b) * prod b(alpha) over the roots alpha of a.

    Subresultant pseudo-remainder sequence with the usual g, h normalizers.
    """
    a, b = _as_int(a), _as_int(b)
    if a.is_zero() or b.is_zero():
        raise ValueError("resultant of the zero polynomial")
    s = 1
    if a.degree < b.degree:
        a, b = b, a
        if a.degree % 2 and b.degree % 2:
            s = -s
    if b.degree == 0:
        return s * b.lc ** a.degree
    ca, cb = a.content(), b.content()
    t = ca ** b.degree * cb ** a.degree
    a, b = a.exact_div(ca), b.exact_div(cb)
    g = h = 1
    while True:
        delta = a.degree - b.degree
        if a.degree % 2 and b.degree % 2:
            s = -s
        r = a.pseudo_rem(b)
        a = b
        if r.is_zero():
            return 0
        b = r.exact_div(g * h**delta)
        g = a.lc
        h = g**delta // h ** (delta - 1) if delta >= 1 else h
        if b.degree == 0:
            dA = a.degree
            if dA == 0:
                h = 1
            else:
                h = b.lc**dA // h ** (dA - 1)
            return s * t * h


def discriminant(a: IntPoly) -> int:
    n = a.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    r = resultant(a, a.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * r // a.lc


def squarefree_part(a: IntPoly) -> IntPoly:
    """a / gcd(a, a'), primitive with positive leading coefficient."""
    a = _as_int(a)
    if a.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    if a.degree <= 0:
        return IntPoly((1,))
    g = poly_gcd(a, a.derivative())
    return a.primitive().exact_div(g).primitive()


def squarefree_decomposition(a: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun's algorithm: primitive squarefree pairwise coprime (s_i, i) with
    pp(a) = prod s_i^i. Constant s_i are omitted."""
    a = _as_int(a).primitive()
    if a.degree <= 0:
        return []
    out = []
    b = a.derivative()
    c = poly_gcd(a, b)
    w = a.exact_div(c)
    y = b.to_rat() // c.to_rat()
    i = 1
    while w.degree > 0:
        z = y - w.derivative().to_rat()
        g = poly_gcd(w, z.primitive()) if z else w.primitive()
        if g.degree > 0:
            out.append((g, i))
        w_new = w.exact_div(g)
        y = z // g.to_rat()
        w = w_new
        i += 1
    return out
