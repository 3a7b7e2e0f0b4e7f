"""Exact integer, rational and Laurent polynomial arithmetic."""
from .factor import Factorization, factor_rationals, factor_squarefree
from .poly import (
    IntPoly,
    LaurentPoly,
    RatPoly,
    discriminant,
    poly_gcd,
    resultant,
    squarefree_decomposition,
    squarefree_part,
)

__all__ = [
    "Factorization",
    "IntPoly",
    "LaurentPoly",
    "RatPoly",
    "discriminant",
    "factor_rationals",
    "factor_squarefree",
    "poly_gcd",
    "resultant",
    "squarefree_decomposition",
    "squarefree_part",
]
