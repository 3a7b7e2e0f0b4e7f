import random

import numpy as np
import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from invorder.abelorder import (
    NoInvariantOrder,
    NotAutomorphism,
    SquareIntMatrix,
    char_poly,
    composition_series,
    order_oracle,
    preserves_order,
)
from invorder.exactpoly import IntPoly
from invorder.linalg import Subspace
from oracles import sympy_charpoly

FIB = SquareIntMatrix(((1, 1), (1, 0)))
ROT = SquareIntMatrix(((0, -1), (1, 0)))


@st.composite
def int_matrices(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    rows = draw(st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n, max_size=n))
    return SquareIntMatrix(tuple(map(tuple, rows)))


@given(int_matrices())
def test_char_poly_and_det_match_sympy(m):
    assert list(char_poly(m).coeffs) == sympy_charpoly(m.to_list())
    assert m.det() == int(sp.Matrix(m.to_list()).det())


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=5))
def test_companion_realizes_polynomial(cs):
    f = IntPoly(cs + [1])
    assert char_poly(SquareIntMatrix.companion(f)) == f


@given(int_matrices(3), int_matrices(2))
def test_kron_matches_numpy(a, b):
    assert np.array_equal(np.array(a.kron(b).to_list()), np.kron(np.array(a.to_list()), np.array(b.to_list())))


def test_matrix_arithmetic():
    assert (FIB**5).to_list() == [[8, 5], [5, 3]]
    assert FIB.apply([1, 0]) == [1, 1]
    assert FIB.tensor_power(2).n == 4
    assert SquareIntMatrix.identity(3).det() == 1


def test_from_json_validation():
    assert SquareIntMatrix.from_json("[[1,2],[3,4]]").to_list() == [[1, 2], [3, 4]]
    for bad in ("[[1,2],[3]]", "[[1.5,0],[0,1]]", '{"a": 1}', "[[true,0],[0,1]]"):
        with pytest.raises(ValueError):
            SquareIntMatrix.from_json(bad)


def test_preserves_order_examples():
    ok, ev = preserves_order(ROT)
    assert not ok and [(str(g), hit) for g, hit in ev] == [("x^2+1", False)]
    assert preserves_order(FIB)[0]
    assert preserves_order(SquareIntMatrix.identity(2))[0]
    assert not preserves_order(SquareIntMatrix(((-1, 0), (0, -1))))[0]
    assert not preserves_order(SquareIntMatrix(((1, 0), (0, -1))))[0]


def test_non_automorphism_rejected():
    with pytest.raises(NotAutomorphism):
        preserves_order(SquareIntMatrix(((2, 0), (0, 1))))
    with pytest.raises(NotAutomorphism):
        order_oracle(SquareIntMatrix(((1, 1), (1, 1))))


def test_no_invariant_order_for_rotation():
    with pytest.raises(NoInvariantOrder):
        order_oracle(ROT)


ORDERABLE = [
    FIB,
    SquareIntMatrix.identity(3),
    SquareIntMatrix(((1, 1), (0, 1))),
    SquareIntMatrix(((2, 1), (1, 1))),
    SquareIntMatrix.companion(IntPoly((-1, -3, 0, 1))),
    SquareIntMatrix(((1, 1, 0, 0), (1, 0, 0, 0), (0, 0, 1, 1), (0, 0, 1, 0))),
    SquareIntMatrix(((1, 1, 5), (1, 0, -2), (0, 0, 1))),
]


def _flag_is_invariant(m, flag):
    for i in range(1, len(flag.levels) + 1):
        sub = Subspace(m.n)
        for v in flag.basis(i):
            sub.add(v)
        for v in flag.basis(i):
            assert sub.contains(m.apply(list(v)))


@pytest.mark.parametrize("m", ORDERABLE, ids=lambda m: str(m.to_list()))
def test_flag_is_invariant_with_irreducible_quotients(m):
    flag = composition_series(m)
    assert sum(lev.dim for lev in flag.levels) == m.n
    _flag_is_invariant(m, flag)
    for lev in flag.levels:
        assert lev.rho.sign() > 0
        assert lev.g.degree == lev.dim


@pytest.mark.parametrize("m", ORDERABLE, ids=lambda m: str(m.to_list()))
def test_positive_cone_axioms(m):
    o = order_oracle(m)
    rng = random.Random(m.n * 7919 + sum(map(sum, m.rows)))
    vecs = [[rng.randint(-6, 6) for _ in range(m.n)] for _ in range(120)]
    for v in vecs:
        s = o.sign(v)
        assert s == -o.sign([-x for x in v])
        assert (s == 0) == (not any(v))
        assert o.sign(m.apply(v)) == s
    for u, v in zip(vecs, vecs[1:]):
        if o.sign(u) > 0 and o.sign(v) > 0:
            assert o.sign([a + b for a, b in zip(u, v)]) > 0
        assert o.compare(u, v) == -o.compare(v, u)


@pytest.mark.parametrize("m", [FIB, SquareIntMatrix(((2, 1), (1, 1))), SquareIntMatrix.companion(IntPoly((-1, -3, 0, 1)))])
def test_irreducible_case_is_a_left_eigenvector_halfspace(m):
    # one flag level: the order is v > 0 iff l.v > 0 for a left eigenvector l
    # at a positive eigenvalue, up to a global sign
    o = order_oracle(m)
    rho = float(o.flag.levels[0].rho)
    vals, vecs = np.linalg.eig(np.array(m.to_list(), dtype=float).T)
    k = int(np.argmin(np.abs(vals - rho)))
    ell = np.real(vecs[:, k])
    rng = random.Random(5)
    signs = set()
    for _ in range(300):
        v = [rng.randint(-20, 20) for _ in range(m.n)]
        t = float(np.dot(ell, v))
        if abs(t) > 1e-9:
            signs.add(o.sign(v) * (1 if t > 0 else -1))
    assert signs == {1} or signs == {-1}


def test_sign_dimension_mismatch():
    o = order_oracle(FIB)
    with pytest.raises(ValueError):
        o.sign([1, 2, 3])
