from .field import FieldSpec, FiniteField, FqElem, finite_field
from .poly import (INFINITY, PolyA, PrimePi, RatK, monic_polys,
                   monic_polys_upto, poly_gcd, poly_ord_at, poly_xgcd, rat_vpi)
from .residue import ResidueField, ResSeries, residue_field, series_reduce_mod_pi
from .series import (USeries, series_compose, series_inv, series_mul,
                     series_root, series_vpi)
from .text import parse_modulus, parse_poly, parse_rat

__all__ = [
    'FieldSpec',
    'FiniteField',
    'FqElem',
    'finite_field',
    'INFINITY',
    'PolyA',
    'PrimePi',
    'RatK',
    'monic_polys',
    'monic_polys_upto',
    'poly_gcd',
    'poly_ord_at',
    'poly_xgcd',
    'rat_vpi',
    'ResidueField',
    'ResSeries',
    'residue_field',
    'series_reduce_mod_pi',
    'USeries',
    'series_compose',
    'series_inv',
    'series_mul',
    'series_root',
    'series_vpi',
    'parse_modulus',
    'parse_poly',
    'parse_rat',
]
