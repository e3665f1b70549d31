from .congruence import CongruenceReport, congruent, identical
from .expr import FormEvaluator, parse_form
from .oldforms import (IOTA, PLAIN, Atom, DelAtom, OldformAlgebra, OldPoly, del_poly,
                       e_star_poly, eigenvalue, minus_pair, plus_pair, w_action)
from .series_ops import (half_weight, iota_slash, partial, partial_series, pi_power, theta,
                         u_operator, v_operator)

# proof_trace lives in .proof, which depends on the structure package

__all__ = [
    'CongruenceReport',
    'congruent',
    'identical',
    'FormEvaluator',
    'parse_form',
    'IOTA',
    'PLAIN',
    'Atom',
    'DelAtom',
    'OldformAlgebra',
    'OldPoly',
    'del_poly',
    'e_star_poly',
    'eigenvalue',
    'minus_pair',
    'plus_pair',
    'w_action',
    'half_weight',
    'iota_slash',
    'partial',
    'partial_series',
    'pi_power',
    'theta',
    'u_operator',
    'v_operator',
]
