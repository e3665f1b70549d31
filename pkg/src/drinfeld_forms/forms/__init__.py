from .base import Level, SeriesForm
from .generators import (delta_series, e_series, e_star_series, eisenstein_tilde,
                         g1_series, gd_from_degree, gd_series, h_series, monic_cutoff)
from .library import GENERATOR_NAMES, FormLibrary

__all__ = [
    'Level',
    'SeriesForm',
    'delta_series',
    'e_series',
    'e_star_series',
    'eisenstein_tilde',
    'g1_series',
    'gd_from_degree',
    'gd_series',
    'h_series',
    'monic_cutoff',
    'GENERATOR_NAMES',
    'FormLibrary',
]
