from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from invorder.cli.parsing import (
    ParseError,
    parse_endo,
    parse_laurent,
    parse_matrix,
    parse_poly,
    parse_range,
    parse_vector,
    parse_word,
)
from invorder.exactpoly import IntPoly, LaurentPoly
from invorder.freeord import FreeWord


@pytest.mark.parametrize(
    "text, coeffs",
    [
        ("x^6+3x^5-x^4-7x^3-x^2+3x+1", (1, 3, -1, -7, -1, 3, 1)),
        ("x^2-1", (-1, 0, 1)),
        (" - x ^ 2 + 2 * x ", (0, 2, -1)),
        ("3", (3,)),
        ("x + x", (0, 2)),
        ("t^3-3t-1", (-1, -3, 0, 1)),
        ("x^(2)", (0, 0, 1)),
        ("0", ()),
    ],
)
def test_parse_poly(text, coeffs):
    assert parse_poly(text) == IntPoly(coeffs)


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=8))
def test_poly_text_round_trip(cs):
    p = IntPoly(cs)
    assert parse_poly(str(p)) == p


@pytest.mark.parametrize(
    "text, token",
    [
        ("x^2+3y", "y"),
        ("x^2 $ 1", "$"),
        ("x^2+", "<end>"),
        ("x^-2", "x^-2"),
        ("x^", "<end>"),
        ("2x3", "3"),
        ("", ""),
        ("x^2**x", "*"),
    ],
)
def test_parse_errors_name_first_bad_token(text, token):
    with pytest.raises(ParseError) as err:
        parse_poly(text)
    assert err.value.token == token
    assert repr(token) in str(err.value)


def test_parse_laurent():
    lp = parse_laurent("-x^3-3x^2+x+7+x^-1-3x^-2-x^-3")
    assert lp == LaurentPoly.from_dict({3: -1, 2: -3, 1: 1, 0: 7, -1: 1, -2: -3, -3: -1})
    assert parse_laurent("x^(-2) + 1") == LaurentPoly.from_dict({-2: 1, 0: 1})
    assert parse_laurent('{"minExp": -1, "coeffs": [1, -1, 1]}') == LaurentPoly.from_dict({-1: 1, 0: -1, 1: 1})
    with pytest.raises(ParseError):
        parse_laurent('{"minExp": 0}')


def test_parse_words():
    assert parse_word("x1*x2^3*x1^-1") == FreeWord(((1, 1), (2, 3), (1, -1)))
    assert parse_word("1").is_identity() and parse_word("").is_identity()
    assert parse_word("x1 x1^-1").is_identity()
    assert parse_word("x12^(-2)") == FreeWord(((12, -2),))
    for bad in ("y1", "x0", "x1^", "x1+x2"):
        with pytest.raises(ParseError):
            parse_word(bad)


@given(st.lists(st.tuples(st.integers(1, 4), st.integers(-3, 3).filter(bool)), max_size=6))
def test_word_text_round_trip(letters):
    w = FreeWord(tuple(letters))
    assert parse_word(str(w)) == w


def test_parse_range_and_vector():
    assert parse_range("0,inf") == (Fraction(0), None)
    assert parse_range("-inf, 1/2") == (None, Fraction(1, 2))
    assert parse_vector("[1, -2, 3]") == [1, -2, 3]
    assert parse_vector("1,-2") == [1, -2]
    with pytest.raises(ParseError):
        parse_range("1")
    with pytest.raises(ParseError):
        parse_range("inf,2")
    with pytest.raises(ParseError):
        parse_vector("1,a")


def test_parse_matrix_and_endo():
    assert parse_matrix("[[0,-1],[1,0]]").to_list() == [[0, -1], [1, 0]]
    e = parse_endo('["x2", "x3", "x1*x2^3"]')
    assert e.p == 3 and str(e.images[2]) == "x1*x2^3"
    for bad in ('["x2", "x5"]', '{"x1": "x2"}', "[1, 2]", "nope"):
        with pytest.raises(ParseError):
            parse_endo(bad)
    with pytest.raises(ParseError):
        parse_matrix("[[1,2]]")
