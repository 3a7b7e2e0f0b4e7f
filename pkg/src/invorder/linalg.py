"""Exact rational linear algebra on lists of Fractions (column vectors as lists)."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vector = list
Matrix = list


def mat_vec(m: Sequence[Sequence], v: Sequence) -> Vector:
    return [sum(a * b for a, b in zip(row, v) if a and b) for row in m]


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col) if x and y) for col in bt] for row in a]


def rref(rows: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv if x else x for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y if y else x for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(m: Sequence[Sequence], ncols: int | None = None) -> list[Vector]:
    """Kernel basis in reduced echelon order: one vector per free column,
    free column set to 1."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    red, pivots = rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[fcol]
        basis.append(v)
    return basis


def inverse(m: Sequence[Sequence]) -> Matrix:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def det_int(m: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant of an integer matrix."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


class Subspace:
    """Incrementally grown subspace of Q^n kept in reduced echelon form."""

    def __init__(self, n: int):
        self.n = n
        self.rows: list[Vector] = []
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence) -> Vector:
        w = [Fraction(x) for x in v]
        for row, pc in zip(self.rows, self.pivots):
            if w[pc] != 0:
                f = w[pc]
                w = [x - f * y if y else x for x, y in zip(w, row)]
        return w

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def add(self, v: Sequence) -> bool:
        w = self.reduce(v)
        pc = next((i for i, x in enumerate(w) if x != 0), None)
        if pc is None:
            return False
        piv = w[pc]
        w = [x / piv for x in w]
        for i, row in enumerate(self.rows):
            if row[pc] != 0:
                f = row[pc]
                self.rows[i] = [x - f * y if y else x for x, y in zip(row, w)]
        at = next((i for i, p in enumerate(self.pivots) if p > pc), len(self.pivots))
        self.rows.insert(at, w)
        self.pivots.insert(at, pc)
        return True

    def complement_columns(self) -> list[int]:
        return [c for c in range(self.n) if c not in self.pivots]
