from .carlitz import (AdditivePoly, bracket_D_L, carlitz_coeffs, inv_exp_coeffs,
                      t_series, zeta_ratio)
from .goss import GossPoly, goss_poly
from .powersums import PowerSums, generating_identity_defect, inverse_root_power_sums

__all__ = [
    'AdditivePoly',
    'bracket_D_L',
    'carlitz_coeffs',
    'inv_exp_coeffs',
    't_series',
    'zeta_ratio',
    'GossPoly',
    'goss_poly',
    'PowerSums',
    'generating_identity_defect',
    'inverse_root_power_sums',
]
