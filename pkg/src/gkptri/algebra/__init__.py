"""Exact algebra: rationals, t-polynomials, t-rational functions, z-series."""
from .scalars import (
    ParameterError,
    SingularTermError,
    Rat,
    binom,
    falling,
    finite_difference,
    format_rat,
    gen_factorial,
    hyp_term,
    parse_rat,
    parse_rat_list,
    rat,
    rising,
)
from .poly import Poly, RatFunc, T, poly_gcd
from .series import (
    POLY,
    QQ,
    RATFUNC,
    Series,
    SeriesRing,
    exp_series,
    gauss_2f1_series,
)

__all__ = [
    "ParameterError", "SingularTermError", "Rat", "binom", "falling", "finite_difference",
    "format_rat", "gen_factorial", "hyp_term", "parse_rat", "parse_rat_list", "rat", "rising",
    "Poly", "RatFunc", "T", "poly_gcd", "POLY", "QQ", "RATFUNC", "Series", "SeriesRing",
    "exp_series", "gauss_2f1_series",
]
