"""Free groups: words, endomorphisms, Magnus expansions and a computable
automorphism-invariant bi-order.

The order compares u and v through w = u^-1 v. Its lowest-degree nonzero
Magnus component lives in the degree-n tensor power of the abelianization,
on which the automorphism acts by the n-fold Kronecker power of its
abelianization matrix; an invariant order oracle for that matrix decides
the sign. Words are only separated up to a depth cap; deeper differences
raise :class:`DepthExceeded`.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from math import comb
from typing import Iterable

import numpy as np
from scipy.optimize import linear_sum_assignment

from .abelorder import NoInvariantOrder, OrderOracle, SquareIntMatrix, char_poly, order_oracle
from .exactpoly import IntPoly
from .specialgal import is_special, product_elimination


class DepthExceeded(Exception):
    """Two distinct words agree in every Magnus degree up to the cap."""


@dataclass(frozen=True)
class FreeWord:
    """Freely reduced word; ``letters`` holds (generator 1..p, nonzero exponent)."""

    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _reduce(self.letters))

    @classmethod
    def gen(cls, i: int, e: int = 1) -> "FreeWord":
        return cls(((i, e),))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, k: int) -> "FreeWord":
        base = self if k >= 0 else self.inverse()
        return FreeWord(base.letters * abs(k))

    def is_identity(self) -> bool:
        return not self.letters

    def length(self) -> int:
        """Number of letters x_i^(+-1)."""
        return sum(abs(e) for _, e in self.letters)

    def max_generator(self) -> int:
        return max((g for g, _ in self.letters), default=0)

    def exponent_sums(self, p: int) -> list[int]:
        out = [0] * p
        for g, e in self.letters:
            out[g - 1] += e
        return out

    def __str__(self):
        if not self.letters:
            return "1"
        return "*".join(f"x{g}" if e == 1 else f"x{g}^{e}" for g, e in self.letters)


def _reduce(letters: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    out: list[tuple[int, int]] = []
    for g, e in letters:
        if e == 0:
            continue
        if out and out[-1][0] == g:
            e2 = out[-1][1] + e
            out.pop()
            if e2:
                out.append((g, e2))
        else:
            out.append((g, e))
    return tuple(out)


def commutator(u: FreeWord, v: FreeWord) -> FreeWord:
    """u v u^-1 v^-1."""
    return u * v * u.inverse() * v.inverse()


@dataclass(frozen=True)
class FreeEndo:
    p: int
    images: tuple[FreeWord, ...]

    def __post_init__(self):
        if len(self.images) != self.p:
            raise ValueError(f"{len(self.images)} images for rank {self.p}")
        for w in self.images:
            if w.max_generator() > self.p:
                raise ValueError(f"image {w} uses a generator beyond x{self.p}")

    @classmethod
    def identity(cls, p: int) -> "FreeEndo":
        return cls(p, tuple(FreeWord.gen(i) for i in range(1, p + 1)))

    def __call__(self, w: FreeWord) -> FreeWord:
        return apply(self, w)

    def compose(self, other: "FreeEndo") -> "FreeEndo":
        """self after other."""
        return FreeEndo(self.p, tuple(apply(self, w) for w in other.images))

    def __str__(self):
        return ", ".join(f"x{i + 1} -> {w}" for i, w in enumerate(self.images))


def apply(e: FreeEndo, w: FreeWord) -> FreeWord:
    if w.max_generator() > e.p:
        raise ValueError(f"{w} uses a generator beyond x{e.p}")
    letters: list[tuple[int, int]] = []
    for g, k in w.letters:
        img = e.images[g - 1] if k > 0 else e.images[g - 1].inverse()
        letters.extend(img.letters * abs(k))
    return FreeWord(tuple(letters))


def companion_automorphism(f: IntPoly) -> FreeEndo:
    """x_i -> x_{i+1} for i < p and x_p -> x_1 x_2^-f_1 ... x_p^-f_{p-1}
    for f = X^p + f_{p-1} X^{p-1} + ... + f_1 X - 1."""
    p = f.degree
    if p < 1 or f.lc != 1:
        raise ValueError(f"{f} is not monic of positive degree")
    if f[0] != -1:
        raise ValueError(f"constant term of {f} is {f[0]}, expected -1")
    images = [FreeWord.gen(i + 1) for i in range(1, p)]
    last = FreeWord(((1, 1),) + tuple((i + 1, -f[i]) for i in range(1, p)))
    images.append(last)
    e = FreeEndo(p, tuple(images))
    m = abelianization_matrix(e)
    if abs(m.det()) != 1 or char_poly(m) != f:
        raise ArithmeticError("companion automorphism does not realize f")
    return e


def abelianization_matrix(e: FreeEndo) -> SquareIntMatrix:
    """Column i holds the exponent sums of the image of x_i."""
    cols = [w.exponent_sums(e.p) for w in e.images]
    return SquareIntMatrix(tuple(tuple(cols[j][i] for j in range(e.p)) for i in range(e.p)))


@dataclass(frozen=True)
class TruncatedSeries:
    """Noncommutative power series in X_1..X_p truncated above degree N.
    ``terms`` omits the constant term and zero coefficients."""

    p: int
    N: int
    terms: dict = field(hash=False)
    constant: int = 1

    def component(self, n: int) -> dict[tuple[int, ...], int]:
        return {m: c for m, c in self.terms.items() if len(m) == n}

    def min_degree(self) -> int | None:
        return min((len(m) for m in self.terms), default=None)

    def component_vector(self, n: int) -> list[int]:
        """Degree-n coefficients indexed by base-p digits, first letter most significant."""
        vec = [0] * self.p**n
        for m, c in self.terms.items():
            if len(m) == n:
                idx = 0
                for g in m:
                    idx = idx * self.p + (g - 1)
                vec[idx] = c
        return vec

    def __str__(self):
        parts = [str(self.constant)] if self.constant else []
        for m in sorted(self.terms, key=lambda t: (len(t), t)):
            c = self.terms[m]
            mono = "".join(f"X{g}" for g in m)
            parts.append(f"{c:+d}*{mono}" if abs(c) != 1 else ("+" if c > 0 else "-") + mono)
        return "".join(parts) or "0"


def magnus_expand(w: FreeWord, N: int, p: int | None = None) -> TruncatedSeries:
    """x_i -> 1 + X_i, x_i^-1 -> 1 - X_i + X_i^2 - ..., truncated at degree N."""
    if N < 1:
        raise ValueError("truncation degree must be positive")
    if p is None:
        p = max(w.max_generator(), 1)
    series: dict[tuple[int, ...], int] = {(): 1}
    for g, e in w.letters:
        factor = [comb_general(e, k) for k in range(N + 1)]
        new: dict[tuple[int, ...], int] = {}
        for mono, c in series.items():
            room = N - len(mono)
            for k in range(room + 1):
                if factor[k]:
                    key = mono + (g,) * k
                    new[key] = new.get(key, 0) + c * factor[k]
        series = {m: c for m, c in new.items() if c}
    const = series.pop((), 0)
    return TruncatedSeries(p, N, series, const)


def comb_general(e: int, k: int) -> int:
    """Binomial coefficient C(e, k) for any integer e."""
    if e >= 0:
        return comb(e, k)
    return (-1) ** k * comb(-e + k - 1, k)


def magnus_depth(w: FreeWord, N: int) -> int | None:
    """Lowest degree of a nonzero Magnus term (the lower central depth), or
    None if all terms up to N vanish."""
    return magnus_expand(w, N).min_degree()


def tensor_char_poly(chi: IntPoly, n: int) -> IntPoly:
    """Characteristic polynomial of the n-fold Kronecker power of a matrix
    with characteristic polynomial chi: the roots are all n-fold products."""
    out = chi
    for _ in range(n - 1):
        out = product_elimination(out, chi).primitive()
    return out


class InvariantOrder:
    """Bi-order on the free group invariant under ``endo``, decided on words
    of lower central depth at most the cap."""

    def __init__(self, endo: FreeEndo):
        self.endo = endo
        self.matrix = abelianization_matrix(endo)
        if abs(self.matrix.det()) != 1:
            raise ValueError("abelianization is not invertible: not an automorphism")
        self.charpoly = char_poly(self.matrix)
        verdict = is_special(self.charpoly)
        if not verdict.is_special:
            raise ValueError(f"characteristic polynomial {self.charpoly} is not special")
        self._oracles: dict[int, OrderOracle] = {}
        self._lock = threading.Lock()

    def oracle(self, n: int) -> OrderOracle:
        o = self._oracles.get(n)
        if o is not None:
            return o
        with self._lock:
            o = self._oracles.get(n)
            if o is None:
                m = self.matrix.tensor_power(n)
                try:
                    o = order_oracle(m, tensor_char_poly(self.charpoly, n))
                except NoInvariantOrder as exc:
                    raise RuntimeError(f"tensor power {n} lost a positive root: {exc}") from exc
                self._oracles[n] = o
        return o

    def sign(self, w: FreeWord, nmax: int) -> int:
        if w.is_identity():
            return 0
        series = magnus_expand(w, nmax, self.endo.p)
        n = series.min_degree()
        if n is None:
            raise DepthExceeded(f"{w} has no nonzero Magnus term up to degree {nmax}")
        return self.oracle(n).sign(series.component_vector(n))

    def compare(self, u: FreeWord, v: FreeWord, nmax: int = 4) -> int:
        """-1, 0, 1 as u <, =, > v."""
        return -self.sign(u.inverse() * v, nmax)


def invariant_compare(e: FreeEndo, u: FreeWord, v: FreeWord, nmax: int = 4) -> int:
    return InvariantOrder(e).compare(u, v, nmax)


def verify_product_eigenvalues(m: SquareIntMatrix, n: int, tol: float = 1e-8) -> bool:
    """Numerically: eigenvalues of the n-fold Kronecker power of m are the
    n-fold products of eigenvalues of m, as multisets."""
    if n < 1:
        raise ValueError("n must be positive")
    if m.n**n > 1024:
        raise ValueError(f"dimension {m.n}^{n} exceeds 1024")
    a = np.array(m.to_list(), dtype=float)
    ev = np.linalg.eigvals(a)
    big = np.ones((1, 1))
    prods = np.ones(1, dtype=complex)
    for _ in range(n):
        big = np.kron(big, a)
        prods = np.multiply.outer(prods, ev).ravel()
    ev_big = np.linalg.eigvals(big)
    cost = np.abs(ev_big[:, None] - prods[None, :])
    rows, cols = linear_sum_assignment(cost)
    return bool(cost[rows, cols].max() <= tol)


def random_word(rng, p: int, max_len: int) -> FreeWord:
    n = rng.randint(0, max_len)
    return FreeWord(tuple((rng.randint(1, p), rng.choice((-1, 1))) for _ in range(n)))
