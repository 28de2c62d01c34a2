"""Exact generating functions, limits and brute-force checks for subtree
statistics of Schroeder and Motzkin trees."""

from .scalar import QuadExt, quad_to_decimal
from .series import BiSeries, Polynomial, RationalFunction, UniSeries

__all__ = ["QuadExt", "quad_to_decimal", "UniSeries", "BiSeries", "Polynomial", "RationalFunction"]
