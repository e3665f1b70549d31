""" drinfeld_forms/operators/congruence.py

f = g (mod pi^e): v_pi(f - g) >= e over the common precision.
"""

from typing import Optional, Union

from ..algebra import INFINITY, PrimePi, USeries, rat_vpi
from ..core.encoders import JSONSerializable, canonical_number


class CongruenceReport(JSONSerializable):
    """Outcome of one congruence test, with the first offending u-exponent"""

    def __init__(self, left: str, right: str, pi: PrimePi, order: Union[int, float], prec: int,
                 valuation: Union[int, float], witness: Optional[int] = None,
                 coefficient: Optional[str] = None):
        self.left = left
        self.right = right
        self.pi = pi.to_text()
        self.order = canonical_number(order)
        self.prec = prec
        self.valuation = canonical_number(valuation)
        self.verdict = bool(valuation >= order)
        self.witness = witness
        self.coefficient = coefficient

    def __bool__(self):
        return self.verdict

    def __repr__(self):
        return (f"CongruenceReport({self.left} = {self.right} mod {self.pi}^{self.order}: "
                f"{self.verdict})")


def congruent(f: USeries, g: USeries, pi: PrimePi, order: Union[int, float] = 1,
              left: str = "f", right: str = "g") -> CongruenceReport:
    """Tests f = g modulo pi^order coefficientwise up to the smaller precision"""
    prec = min(f.prec, g.prec)
    valuation: Union[int, float] = INFINITY
    witness = None
    coefficient = None
    for n in range(prec):
        diff = f.coeffs[n] - g.coeffs[n]
        if not diff:
            continue
        v = rat_vpi(diff, pi)
        valuation = min(valuation, v)
        if witness is None and v < order:
            witness = n
            coefficient = diff.to_text()
    return CongruenceReport(left, right, pi, order, prec, valuation, witness, coefficient)


def identical(f: USeries, g: USeries, pi: PrimePi,
              left: str = "f", right: str = "g") -> CongruenceReport:
    """Exact equality up to the smaller precision, reported like a congruence"""
    return congruent(f, g, pi, INFINITY, left, right)
