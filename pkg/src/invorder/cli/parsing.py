"""Text syntax for polynomials, Laurent polynomials, words and vectors.

Polynomials: ``x^6+3x^5-x^4-7x^3-x^2+3x+1`` (one variable letter, ``*`` optional,
whitespace ignored). Laurent polynomials additionally allow ``x^-3``.
Words: ``x1*x2^3*x1^-1``; ``1`` or an empty string is the identity.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction

from ..abelorder import SquareIntMatrix
from ..exactpoly import IntPoly, LaurentPoly
from ..freeord import FreeEndo, FreeWord


class ParseError(ValueError):
    def __init__(self, text: str, pos: int, token: str, reason: str = "unexpected token"):
        self.text, self.pos, self.token = text, pos, token
        super().__init__(f"{reason} {token!r} at position {pos} in {text!r}")


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z])|(\^)|([+\-])|(\*)|(\()|(\)))")


def _tokens(text: str):
    pos = 0
    out = []
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if not m:
            bad = stripped[pos:].lstrip()[:1]
            raise ParseError(text, pos + (len(stripped[pos:]) - len(stripped[pos:].lstrip())), bad)
        kind = m.lastindex
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return out


def _parse_terms(text: str, allow_negative: bool) -> dict[int, int]:
    toks = _tokens(text)
    if not toks:
        raise ParseError(text, 0, "", "empty polynomial")
    var = None
    terms: dict[int, int] = {}
    i = 0

    def peek(k=0):
        return toks[i + k] if i + k < len(toks) else (None, None, len(text))

    first = True
    while i < len(toks):
        sign = 1
        kind, val, pos = peek()
        if kind == 4:
            sign = -1 if val == "-" else 1
            i += 1
        elif not first:
            raise ParseError(text, pos, val)
        first = False
        coeff = None
        kind, val, pos = peek()
        if kind == 1:
            coeff = int(val)
            i += 1
            if peek()[0] == 5:
                i += 1
                if peek()[0] != 2:
                    k2, v2, p2 = peek()
                    raise ParseError(text, p2, v2 or "<end>")
        kind, val, pos = peek()
        exp = 0
        if kind == 2:
            if var is None:
                var = val
            elif val != var:
                raise ParseError(text, pos, val, "second variable")
            i += 1
            exp = 1
            if peek()[0] == 3:
                i += 1
                exp = _parse_exponent(text, toks, i)
                i = exp[1]
                exp = exp[0]
        elif coeff is None:
            raise ParseError(text, pos, val or "<end>")
        if exp < 0 and not allow_negative:
            raise ParseError(text, pos, f"{var}^{exp}", "negative exponent")
        terms[exp] = terms.get(exp, 0) + sign * (1 if coeff is None else coeff)
    return terms


def _parse_exponent(text, toks, i):
    paren = False
    if i < len(toks) and toks[i][0] == 6:
        paren = True
        i += 1
    sign = 1
    if i < len(toks) and toks[i][0] == 4:
        sign = -1 if toks[i][1] == "-" else 1
        i += 1
    if i >= len(toks) or toks[i][0] != 1:
        tok = toks[i] if i < len(toks) else (None, "<end>", len(text))
        raise ParseError(text, tok[2], tok[1], "bad exponent")
    e = sign * int(toks[i][1])
    i += 1
    if paren:
        if i >= len(toks) or toks[i][0] != 7:
            tok = toks[i] if i < len(toks) else (None, "<end>", len(text))
            raise ParseError(text, tok[2], tok[1], "missing ')'")
        i += 1
    return e, i


def parse_poly(text: str) -> IntPoly:
    terms = _parse_terms(text, allow_negative=False)
    deg = max(terms)
    return IntPoly(terms.get(k, 0) for k in range(deg + 1))


def parse_laurent(text: str) -> LaurentPoly:
    text = text.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
            return LaurentPoly(int(data["minExp"]), tuple(int(c) for c in data["coeffs"]))
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(text, 0, text[:1], f"bad Laurent JSON ({exc})") from None
    return LaurentPoly.from_dict(_parse_terms(text, allow_negative=True))


_WORD_TOKEN = re.compile(r"\s*(?:x(\d+)(?:\^(\(?-?\d+\)?))?|(\*)|(1)(?!\d))")


def parse_word(text: str) -> FreeWord:
    s = text.strip()
    if s in ("", "1", "e"):
        return FreeWord()
    pos = 0
    letters = []
    while pos < len(s):
        m = _WORD_TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError(text, pos, s[pos:pos + 1])
        if m.group(1) is not None:
            g = int(m.group(1))
            if g < 1:
                raise ParseError(text, m.start(1), f"x{g}", "generator index must be positive")
            e = int(m.group(2).strip("()")) if m.group(2) else 1
            letters.append((g, e))
        pos = m.end()
    return FreeWord(tuple(letters))


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(text, 0, text.strip(), "bad rational") from None


def parse_range(text: str) -> tuple[Fraction | None, Fraction | None]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ParseError(text, 0, text, "range must be 'a,b'")

    def one(t):
        t = t.strip().lower()
        if t in ("-inf", "inf", "+inf", "-oo", "oo", "+oo", ""):
            return None
        return parse_rational(t)

    lo, hi = one(parts[0]), one(parts[1])
    if parts[0].strip().lower() in ("inf", "+inf", "oo", "+oo"):
        raise ParseError(text, 0, parts[0], "lower end cannot be +inf")
    return lo, hi


def parse_vector(text: str) -> list[int]:
    s = text.strip()
    if s.startswith("["):
        try:
            data = json.loads(s)
        except ValueError:
            raise ParseError(text, 0, s[:1], "bad vector JSON") from None
    else:
        data = s.split(",")
    out = []
    for item in data:
        try:
            out.append(int(item))
        except (TypeError, ValueError):
            raise ParseError(text, s.find(str(item).strip()), str(item).strip(), "non-integer entry") from None
    return out


def parse_matrix(text: str) -> SquareIntMatrix:
    try:
        return SquareIntMatrix.from_json(text)
    except ValueError as exc:
        raise ParseError(text, 0, text.strip()[:1], f"bad matrix ({exc})") from None


def parse_endo(text: str) -> FreeEndo:
    try:
        data = json.loads(text)
    except ValueError:
        raise ParseError(text, 0, text.strip()[:1], "bad endomorphism JSON") from None
    if not isinstance(data, list) or not all(isinstance(w, str) for w in data):
        raise ParseError(text, 0, text.strip()[:1], "endomorphism must be a JSON list of words")
    words = [parse_word(w) for w in data]
    try:
        return FreeEndo(len(words), tuple(words))
    except ValueError as exc:
        raise ParseError(text, 0, text.strip()[:1], str(exc)) from None
