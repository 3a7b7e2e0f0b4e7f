"""JSON-ready encodings of the library's values, and text rendering."""
from __future__ import annotations

import json
from fractions import Fraction

from ..exactpoly import Factorization
from ..realroots import IsolatingInterval, RealAlgebraic


def rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def ascending(p, var: str = "z") -> str:
    """Polynomial text with terms from low to high degree, e.g. 1-20z^2-9z^4-z^6."""
    parts = []
    for e, c in enumerate(p.coeffs):
        if c == 0:
            continue
        a = abs(c)
        mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
        coef = rational(a)
        if e and a == 1:
            text = mono
        elif e and Fraction(a).denominator != 1:
            text = f"{coef}*{mono}"
        else:
            text = coef + mono
        parts.append(("-" if c < 0 else "+") + text)
    s = "".join(parts) or "0"
    return s[1:] if s.startswith("+") else s


def interval(iv: IsolatingInterval) -> list[str]:
    return [rational(iv.lo), rational(iv.hi)]


def algebraic(a: RealAlgebraic, digits: int = 15) -> dict:
    return {
        "minpoly": str(a.minpoly),
        "interval": interval(a.interval),
        "approximate": a.approx(digits),
    }


def factorization(fac: Factorization) -> dict:
    return {
        "unit": rational(fac.unit),
        "factors": [{"factor": str(g), "multiplicity": m} for g, m in fac.factors],
        "text": str(fac),
    }


def dumps(report: dict, compact: bool = False) -> str:
    if compact:
        return json.dumps(report, separators=(",", ":"), ensure_ascii=False)
    return json.dumps(report, indent=2, ensure_ascii=False)


def render_text(report: dict) -> str:
    lines: list[str] = []
    _render(report, 0, lines)
    return "\n".join(lines)


def _render(value, indent: int, lines: list[str], key: str | None = None) -> None:
    pad = "  " * indent
    head = f"{pad}{key}:" if key is not None else None
    if isinstance(value, dict):
        if _flat(value):
            lines.append(f"{head} " + ", ".join(f"{k}={_scalar(v)}" for k, v in value.items()) if head else
                         pad + ", ".join(f"{k}={_scalar(v)}" for k, v in value.items()))
            return
        if head:
            lines.append(head)
            indent += 1
        for k, v in value.items():
            _render(v, indent, lines, k)
    elif isinstance(value, list):
        if all(not isinstance(v, (dict, list)) for v in value):
            text = "[" + ", ".join(_scalar(v) for v in value) + "]"
            lines.append(f"{head} {text}" if head else pad + text)
            return
        if head:
            lines.append(head)
        for v in value:
            sub: list[str] = []
            _render(v, indent + 1, sub)
            if sub:
                sub[0] = "  " * indent + "- " + sub[0].lstrip()
            lines.extend(sub)
    else:
        lines.append(f"{head} {_scalar(value)}" if head else pad + _scalar(value))


def _flat(d: dict) -> bool:
    return len(d) <= 4 and all(not isinstance(v, (dict, list)) for v in d.values())


def _scalar(v) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)
