import itertools
from fractions import Fraction

import numpy as np
import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from invorder.exactpoly import IntPoly
from invorder.realroots import RealAlgebraic, count_roots_closed, real_roots
from invorder.specialgal import (
    Condition,
    check_root_product_positive,
    classify_factor,
    has_positive_real_root,
    is_special,
    minpoly_power,
    minpoly_product,
    normalize_unit_lead,
    odd_prime_power,
    positive_witness,
    power_elimination,
    product_elimination,
    root_product,
)
from oracles import X, numeric_roots, to_sympy

SEXTIC = IntPoly((1, 3, -1, -7, -1, 3, 1))
CUBIC = IntPoly((-1, -3, 0, 1))


def positive_root(f):
    return [r for r in real_roots(f) if r.sign() > 0][0]


@pytest.mark.parametrize("d", range(0, 200))
def test_odd_prime_power_against_factorint(d):
    fs = sp.factorint(d) if d > 1 else {}
    expected = len(fs) == 1 and next(iter(fs)) % 2 == 1
    assert odd_prime_power(d) == expected


@pytest.mark.parametrize(
    "coeffs, cond",
    [
        ((-1, -3, 0, 1), Condition.ODD_PRIME_POWER_REAL_NEG_CONST),
        ((-1, -2, 1, 1), Condition.ODD_PRIME_POWER_REAL_NEG_CONST),
        ((1, -3, 1), Condition.ALL_ROOTS_POSITIVE),
        ((-1, 1), Condition.ALL_ROOTS_POSITIVE),
        ((1, 0, 1), Condition.FAILS),
        ((1, 1), Condition.FAILS),
        ((-1, -1, 1), Condition.FAILS),  # roots of both signs, even degree
        ((1, -3, 0, 1), Condition.FAILS),  # cubic with positive constant, a negative root
    ],
)
def test_classify_factor(coeffs, cond):
    assert classify_factor(IntPoly(coeffs)) is cond


def test_condition_one_wins_when_both_hold():
    # irreducible cubic, all roots positive, negative constant term
    g = IntPoly((-1, 6, -5, 1))
    assert sp.Poly(to_sympy(g.coeffs).as_expr(), X).is_irreducible
    assert classify_factor(g) is Condition.ODD_PRIME_POWER_REAL_NEG_CONST


def test_sextic_is_special_under_condition_one():
    v = is_special(SEXTIC)
    assert v.is_special
    assert [str(g) for g, _ in v.per_factor] == ["x^3+x^2-2x-1", "x^3+2x^2-x-1"]
    assert all(c is Condition.ODD_PRIME_POWER_REAL_NEG_CONST for _, c in v.per_factor)


def test_is_special_normalizes_sign_and_rejects_non_monic():
    assert is_special(-CUBIC).is_special
    assert normalize_unit_lead(IntPoly((-3, -9, 0, 3))) == CUBIC
    with pytest.raises(ValueError):
        is_special(IntPoly((1, 2)))
    with pytest.raises(ValueError):
        is_special(IntPoly(()))


def test_not_special():
    assert not is_special(IntPoly((1, -1, 1))).is_special
    assert not has_positive_real_root(IntPoly((1, 0, 1)))


# products and powers


def test_golden_ratio_products():
    phi = positive_root(IntPoly((-1, -1, 1)))
    psi = real_roots(IntPoly((-1, -1, 1)))[0]
    assert minpoly_product(phi, psi) == RealAlgebraic.rational(-1)
    sq = minpoly_power(phi, 2)
    assert sq.minpoly == IntPoly((1, -3, 1)) and sq.sign() > 0
    cube = minpoly_power(phi, 3)
    assert cube.minpoly == IntPoly((-1, -4, 1))
    assert minpoly_product(phi, phi) == sq


def test_radical_products():
    r2 = positive_root(IntPoly((-2, 0, 1)))
    r3 = positive_root(IntPoly((-3, 0, 1)))
    assert minpoly_product(r2, r2) == RealAlgebraic.rational(2)
    p = minpoly_product(r2, r3)
    assert p.minpoly == IntPoly((-6, 0, 1))
    assert abs(float(p) - 6**0.5) < 1e-12


small_polys = st.sampled_from(
    [IntPoly(c) for c in [(-2, 0, 1), (-1, -1, 1), (-1, -3, 0, 1), (-1, -2, 1, 1), (1, -3, 1), (-3, 1), (2, 1), (-5, 0, 1)]]
)


@given(small_polys, small_polys, st.data())
def test_product_matches_floats_and_is_irreducible(f, g, data):
    a = data.draw(st.sampled_from(real_roots(f)))
    b = data.draw(st.sampled_from(real_roots(g)))
    p = minpoly_product(a, b)
    assert abs(float(p) - float(a) * float(b)) < 1e-9
    assert sp.Poly(to_sympy(p.minpoly.coeffs).as_expr(), X).is_irreducible
    assert count_roots_closed(p.minpoly, p.interval.lo, p.interval.hi) == 1


@given(small_polys, st.integers(0, 5), st.data())
def test_power_matches_floats(f, k, data):
    a = data.draw(st.sampled_from(real_roots(f)))
    p = minpoly_power(a, k)
    assert abs(float(p) - float(a) ** k) < 1e-9 * max(1.0, abs(float(a)) ** k)


def relative_residual(p, t) -> float:
    cs = np.array([float(c) for c in p.coeffs])
    powers = t ** np.arange(len(cs))
    return abs(np.dot(cs, powers)) / np.dot(np.abs(cs), np.abs(powers))


@given(small_polys, small_polys)
def test_eliminants_vanish_on_all_products(f, g):
    e = product_elimination(f, g)
    rf, rg = numeric_roots(f.coeffs), numeric_roots(g.coeffs)
    assert e.degree == f.degree * g.degree
    for u, v in itertools.product(rf, rg):
        assert relative_residual(e, u * v) < 1e-9
    pe = power_elimination(f, 3)
    for u in rf:
        assert relative_residual(pe, u**3) < 1e-9


# root products and witnesses


def test_root_product_on_sextic():
    roots = [float(r) for r in real_roots(SEXTIC)]
    alpha = root_product(SEXTIC, (0, 0, 2))
    assert abs(float(alpha) - roots[2] ** 2) < 1e-12
    ok, w = check_root_product_positive(SEXTIC, (0, 0, 2))
    assert ok and w.interval.lo > 0
    assert w == alpha  # already positive, so it is its own witness


def test_witness_is_a_conjugate():
    ok, w = check_root_product_positive(SEXTIC, {0: 1, 4: 1})
    alpha = root_product(SEXTIC, {0: 1, 4: 1})
    assert ok and w.minpoly == alpha.minpoly and w.interval.lo > 0


def test_positive_witness_none_without_positive_conjugate():
    minus_two = RealAlgebraic.rational(-2)
    assert positive_witness(minus_two) is None


def test_root_product_errors():
    with pytest.raises(IndexError):
        root_product(CUBIC, (1, 1, 1, 1))
    with pytest.raises(ValueError):
        root_product(CUBIC, (1, -1))
    with pytest.raises(ValueError):
        check_root_product_positive(IntPoly((1, 0, 1)), (1,))


def test_empty_product_is_one():
    ok, w = check_root_product_positive(CUBIC, ())
    assert ok and w == RealAlgebraic.rational(1)


def test_product_with_fraction_rational():
    half = RealAlgebraic.rational(Fraction(1, 2))
    phi = positive_root(IntPoly((-1, -1, 1)))
    p = minpoly_product(half, phi)
    assert abs(float(p) - float(phi) / 2) < 1e-12
