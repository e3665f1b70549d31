from .congruences import Congruences
from .counterexample import Counterexample
from .filtration import Filtration
from .operators import Operators

__all__ = [
    'Congruences',
    'Counterexample',
    'Filtration',
    'Operators'
]
