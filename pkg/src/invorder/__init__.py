"""Automorphism-invariant bi-orderings: abelian criteria, special polynomials,
free-group orders and fibred-knot screening."""

__version__ = "0.1.0"
