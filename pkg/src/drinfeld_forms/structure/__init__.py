from .filtration import ad_bd, filtration, filtration_by_search, solve_prec
from .isobaric import (IsobarPoly, Monomial, ResIsobarPoly, enumerate_monomials,
                       isobaric_coprime, isobaric_divide_power, isobaric_solve,
                       reduce_isobaric, upoly_divmod, upoly_gcd)

__all__ = [
    'ad_bd',
    'filtration',
    'filtration_by_search',
    'solve_prec',
    'IsobarPoly',
    'Monomial',
    'ResIsobarPoly',
    'enumerate_monomials',
    'isobaric_coprime',
    'isobaric_divide_power',
    'isobaric_solve',
    'reduce_isobaric',
    'upoly_divmod',
    'upoly_gcd',
]
