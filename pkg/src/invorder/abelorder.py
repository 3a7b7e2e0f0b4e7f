"""Invariant bi-orderings of Z^n under an integer automorphism.

An automorphism m of Z^n preserves some total order iff every irreducible
factor of its characteristic polynomial has a positive real root. When it
does, :func:`order_oracle` builds one explicitly: a flag of m-invariant
subspaces whose successive quotients are irreducible Q[X]-modules
Q[X]/(g), each embedded in R by X -> rho for a positive root rho of g, and
ordered lexicographically along the flag.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactpoly import IntPoly, RatPoly, factor_rationals
from .linalg import Subspace, det_int, inverse, mat_vec, nullspace
from .realroots import RealAlgebraic, real_roots, sign_of_poly_at
from .specialgal import has_positive_real_root


class NotAutomorphism(ValueError):
    pass


class NoInvariantOrder(ValueError):
    pass


@dataclass(frozen=True)
class SquareIntMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix is not square")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_json(cls, text: str) -> "SquareIntMatrix":
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise ValueError("matrix JSON must be an array of rows")
        if not all(isinstance(x, int) and not isinstance(x, bool) for r in data for x in r):
            raise ValueError("matrix entries must be integers")
        return cls(tuple(tuple(r) for r in data))

    @classmethod
    def identity(cls, n: int) -> "SquareIntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def companion(cls, f: IntPoly) -> "SquareIntMatrix":
        """Companion matrix with characteristic polynomial f (monic)."""
        if f.lc != 1:
            raise ValueError("companion matrix needs a monic polynomial")
        n = f.degree
        rows = [[0] * n for _ in range(n)]
        for i in range(1, n):
            rows[i][i - 1] = 1
        for i in range(n):
            rows[i][n - 1] = -f[i]
        return cls(tuple(tuple(r) for r in rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    def det(self) -> int:
        return det_int(self.rows)

    def apply(self, v: Sequence) -> list:
        if len(v) != self.n:
            raise ValueError(f"vector of length {len(v)} for a {self.n}x{self.n} matrix")
        return mat_vec(self.rows, v)

    def __matmul__(self, other: "SquareIntMatrix") -> "SquareIntMatrix":
        cols = list(zip(*other.rows))
        return SquareIntMatrix(tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows))

    def __pow__(self, k: int) -> "SquareIntMatrix":
        out = SquareIntMatrix.identity(self.n)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def kron(self, other: "SquareIntMatrix") -> "SquareIntMatrix":
        p, q = self.n, other.n
        return SquareIntMatrix(
            tuple(
                tuple(self.rows[i // q][j // q] * other.rows[i % q][j % q] for j in range(p * q))
                for i in range(p * q)
            )
        )

    def tensor_power(self, k: int) -> "SquareIntMatrix":
        out = SquareIntMatrix(((1,),))
        for _ in range(k):
            out = out.kron(self)
        return out

    def poly_eval(self, g: IntPoly) -> list[list[int]]:
        """g(m) by Horner."""
        n = self.n
        acc = [[0] * n for _ in range(n)]
        for c in reversed(g.coeffs):
            acc = [[sum(acc[i][k] * self.rows[k][j] for k in range(n) if acc[i][k]) for j in range(n)] for i in range(n)]
            for i in range(n):
                acc[i][i] += c
        return acc

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def char_poly(m: SquareIntMatrix) -> IntPoly:
    """det(X I - m) by Bareiss elimination over Z[X]. Leading principal minors
    of X I - m are monic, so no pivoting is needed."""
    n = m.n
    if n == 0:
        return IntPoly((1,))
    a = [[IntPoly((-m.rows[i][j], int(i == j))) for j in range(n)] for i in range(n)]
    prev = IntPoly((1,))
    for k in range(n - 1):
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * piv - a[i][k] * a[k][j]).exact_div(prev)
        prev = piv
    return a[n - 1][n - 1]


def _require_automorphism(m: SquareIntMatrix) -> None:
    d = m.det()
    if abs(d) != 1:
        raise NotAutomorphism(f"determinant {d}: not an automorphism of Z^{m.n}")


def preserves_order(m: SquareIntMatrix, charpoly: IntPoly | None = None) -> tuple[bool, list[tuple[RatPoly, bool]]]:
    """Whether m preserves some bi-ordering of Z^n, with per-factor evidence."""
    _require_automorphism(m)
    chi = charpoly if charpoly is not None else char_poly(m)
    evidence = [(g, has_positive_real_root(g.to_int())) for g in factor_rationals(chi).irreducibles()]
    return all(ok for _, ok in evidence), evidence


@dataclass(frozen=True)
class FlagLevel:
    """One irreducible quotient A_i / A_{i-1} = Q[X]/(g) with cyclic basis
    w, m w, ..., m^(d-1) w."""

    g: IntPoly
    rho: RealAlgebraic
    generators: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return self.g.degree


@dataclass(frozen=True)
class InvariantFlag:
    levels: tuple[FlagLevel, ...]
    coords: tuple[tuple[Fraction, ...], ...] = field(repr=False)

    def basis(self, i: int) -> list[tuple[Fraction, ...]]:
        """Basis of A_i, the span of the generators of levels 1..i."""
        return [v for lev in self.levels[:i] for v in lev.generators]

    def level_coordinates(self, v: Sequence) -> list[list[Fraction]]:
        c = mat_vec(self.coords, v)
        out, k = [], 0
        for lev in self.levels:
            out.append(c[k : k + lev.dim])
            k += lev.dim
        return out


def _smallest_positive_root(g: IntPoly) -> RealAlgebraic:
    for r in real_roots(g):
        if r.sign() > 0:
            return r
    raise NoInvariantOrder(f"{g} has no positive real root")


def composition_series(m: SquareIntMatrix, charpoly: IntPoly | None = None) -> InvariantFlag:
    """Flag 0 = A_0 < A_1 < ... < A_k = Q^n of m-invariant subspaces with
    irreducible quotients, built factor by factor in canonical order."""
    ok, evidence = preserves_order(m, charpoly)
    if not ok:
        bad = ", ".join(str(g) for g, hit in evidence if not hit)
        raise NoInvariantOrder(f"no invariant order exists: {bad} has no positive real root")
    n = m.n
    space = Subspace(n)
    levels = []
    for gq, _ in evidence:
        g = gq.to_int()
        G = m.poly_eval(g)
        rho = _smallest_positive_root(g)
        while True:
            cols = space.complement_columns()
            if not cols:
                break
            images = [space.reduce([G[i][j] for i in range(n)]) for j in cols]
            gbar = [[images[jj][ci] for jj in range(len(cols))] for ci in cols]
            kernel = nullspace(gbar, len(cols))
            if not kernel:
                break
            # later kernel vectors stay in the kernel on every further quotient
            for kv in kernel:
                w = [Fraction(0)] * n
                for ci, val in zip(cols, kv):
                    w[ci] = val
                if space.contains(w):
                    continue
                gens = []
                for _ in range(g.degree):
                    gens.append(tuple(Fraction(t) for t in w))
                    if not space.add(w):
                        raise ArithmeticError("cyclic vectors are dependent modulo the flag")
                    w = m.apply(w)
                levels.append(FlagLevel(g, rho, tuple(gens)))
    if space.dim != n:
        raise ArithmeticError("flag does not exhaust the space")
    cmat = [[v[i] for lev in levels for v in lev.generators] for i in range(n)]
    coords = tuple(tuple(r) for r in inverse(cmat))
    return InvariantFlag(tuple(levels), coords)


@dataclass(frozen=True)
class OrderOracle:
    matrix: SquareIntMatrix
    flag: InvariantFlag

    def sign(self, v: Sequence[int]) -> int:
        return sign(self, v)

    def compare(self, u: Sequence[int], v: Sequence[int]) -> int:
        """-1, 0, 1 as u <, =, > v."""
        return sign(self, [a - b for a, b in zip(u, v)])


def order_oracle(m: SquareIntMatrix, charpoly: IntPoly | None = None) -> OrderOracle:
    return OrderOracle(m, composition_series(m, charpoly))


def sign(o: OrderOracle, v: Sequence[int]) -> int:
    """Sign of v in the lexicographic order along the flag: the innermost
    level containing v decides, through its real embedding."""
    if len(v) != o.matrix.n:
        raise ValueError(f"vector of length {len(v)} for dimension {o.matrix.n}")
    blocks = o.flag.level_coordinates(v)
    for lev, c in zip(reversed(o.flag.levels), reversed(blocks)):
        if any(c):
            return sign_of_poly_at(RatPoly(c), lev.rho)
    return 0
