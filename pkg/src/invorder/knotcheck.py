"""Alexander polynomial screening for fibred knots.

An Alexander polynomial all of whose roots are real and positive gives an
orderable knot group; failing that, a special normalized polynomial still
does. Neither failing is not a proof of non-orderability, so that case is
reported as inconclusive.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .exactpoly import Factorization, IntPoly, LaurentPoly, RatPoly, factor_rationals, squarefree_part
from .realroots import count_real_roots
from .specialgal import SpecialVerdict, is_special


class Convention(enum.Enum):
    """Substitution used between Alexander and Conway forms."""

    STANDARD = "standard"  # z = x^(1/2) - x^(-1/2)
    PAPER = "paper"  # z = x^(1/2) + x^(-1/2)

    @property
    def t_shift(self) -> int:
        """t = x + 1/x equals z^2 + t_shift."""
        return 2 if self is Convention.STANDARD else -2


class VerdictKind(enum.Enum):
    ORDERABLE_TPR = "OrderableTPR"
    ORDERABLE_SPECIAL = "OrderableSpecial"
    INCONCLUSIVE = "Inconclusive"
    INVALID_INPUT = "InvalidInput"


@dataclass(frozen=True)
class FibredCheck:
    symmetric: bool
    value_at_one: int
    monic_extremes: bool
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def _symmetric_up_to_unit(a: LaurentPoly) -> bool:
    if a.span % 2:
        return False
    cs = a.coeffs
    rev = tuple(reversed(cs))
    return rev == cs or rev == tuple(-c for c in cs)


def validate_fibred(a: LaurentPoly) -> tuple[bool, FibredCheck]:
    """Symmetric up to +-x^k, value +-1 at x = 1, extreme coefficients +-1."""
    if a.is_zero():
        raise ValueError("zero polynomial")
    failures = []
    sym = _symmetric_up_to_unit(a)
    if not sym:
        failures.append("not symmetric under x -> 1/x up to a unit +-x^k")
    v1 = a.value_at_one()
    if abs(v1) != 1:
        failures.append(f"value at x = 1 is {v1}, not +-1")
    extremes = abs(a.coeffs[0]) == 1 and abs(a.coeffs[-1]) == 1
    if not extremes:
        failures.append(f"extreme coefficients {a.coeffs[-1]}, {a.coeffs[0]} are not +-1")
    check = FibredCheck(sym, v1, extremes, tuple(failures))
    return check.ok, check


def normalize_monic(a: LaurentPoly) -> IntPoly:
    """+-x^k * a as a monic polynomial with nonzero constant term."""
    if a.is_zero():
        raise ValueError("zero polynomial")
    if abs(a.coeffs[0]) != 1 or abs(a.coeffs[-1]) != 1:
        raise ValueError("extreme coefficients must be +-1")
    p = a.to_intpoly()
    return -p if p.lc < 0 else p


def center(a: LaurentPoly) -> LaurentPoly:
    """x^k * a with exponents symmetric about 0; needs even span."""
    if a.span % 2:
        raise ValueError(f"{a} has odd span and cannot be centred")
    return a.shift(-a.min_exp - a.span // 2)


def conway_from_alexander(a: LaurentPoly, convention: Convention | str = Convention.STANDARD) -> RatPoly:
    """The polynomial N with N(z) = a(x) under the chosen substitution."""
    convention = Convention(convention)
    c = center(a)
    if c.invert_variable() != c:
        raise ValueError(f"{a} is not symmetric under x -> 1/x")
    h = c.max_exp
    terms = c.terms()
    # x^k + x^-k = T_k(t) with T_0 = 2, T_1 = t, T_{k+1} = t T_k - T_{k-1}
    t = RatPoly((0, 1))
    cheb = [RatPoly((2,)), t]
    while len(cheb) <= h:
        cheb.append(t * cheb[-1] - cheb[-2])
    p = RatPoly((terms.get(0, 0),))
    for k in range(1, h + 1):
        p = p + terms.get(k, 0) * cheb[k]
    z2 = RatPoly((convention.t_shift, 0, 1))
    return p.compose(z2)


def alexander_from_conway(nabla: RatPoly | IntPoly, convention: Convention | str = Convention.STANDARD) -> LaurentPoly:
    """Inverse of :func:`conway_from_alexander`; nabla must be even in z."""
    convention = Convention(convention)
    cs = list(nabla.coeffs)
    if any(c for c in cs[1::2]):
        raise ValueError(f"{nabla} has odd-degree terms")
    q = RatPoly(cs[0::2])  # nabla(z) = q(z^2)
    p = q.compose(RatPoly((-convention.t_shift, 1)))  # t = z^2 + shift
    t = LaurentPoly.from_dict({1: 1, -1: 1})
    acc = LaurentPoly(0, ())
    power = LaurentPoly(0, (1,))
    for c in p.coeffs:
        if c.denominator != 1:
            raise ValueError("non-integral Conway coefficients")
        acc = acc + power * int(c)
        power = power * t
    return acc


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    check: FibredCheck
    normalized: IntPoly | None = None
    factorization: Factorization | None = None
    distinct_roots: int = 0
    real_roots: int = 0
    positive_roots: int = 0
    special: SpecialVerdict | None = None
    notes: tuple[str, ...] = field(default=())


def orderability_verdict(a: LaurentPoly) -> Verdict:
    if a.is_zero():
        return Verdict(VerdictKind.INVALID_INPUT, FibredCheck(False, 0, False, ("zero polynomial",)))
    ok, check = validate_fibred(a)
    if not ok:
        return Verdict(VerdictKind.INVALID_INPUT, check)
    f = normalize_monic(a)
    fac = factor_rationals(f)
    distinct = squarefree_part(f).degree
    nreal = count_real_roots(f)
    npos = count_real_roots(f, 0, None)
    spec = is_special(f)
    common = dict(check=check, normalized=f, factorization=fac, distinct_roots=distinct,
                  real_roots=nreal, positive_roots=npos, special=spec)
    if npos == distinct:
        return Verdict(VerdictKind.ORDERABLE_TPR, **common, notes=("all roots real and positive",))
    notes = []
    if nreal > npos:
        notes.append("has negative real roots")
    if nreal < distinct:
        notes.append("has non-real roots")
    if spec.is_special:
        return Verdict(VerdictKind.ORDERABLE_SPECIAL, **common, notes=tuple(notes))
    return Verdict(VerdictKind.INCONCLUSIVE, **common, notes=tuple(notes))
