"""Exact integer, rational and Gaussian-rational arithmetic on polynomials."""
from .gaussian import BigRat, GaussRat, I
from .polynomial import (
    IntPoly,
    compose,
    degree_guard,
    eval_gauss,
    eval_rat,
    even_odd_split,
    one_plus_x_pow,
)
from .roots import (
    NegRootIsolation,
    divexact,
    is_rational_square,
    negative_real_roots,
    poly_gcd,
    prem,
    rational_roots,
    square_free,
    sturm_chain,
)

__all__ = [
    "BigRat",
    "GaussRat",
    "I",
    "IntPoly",
    "NegRootIsolation",
    "compose",
    "degree_guard",
    "divexact",
    "eval_gauss",
    "eval_rat",
    "even_odd_split",
    "is_rational_square",
    "negative_real_roots",
    "one_plus_x_pow",
    "poly_gcd",
    "prem",
    "rational_roots",
    "square_free",
    "sturm_chain",
]
