""" drinfeld_forms/algebra/residue.py

The residue field A/pi = F_{q^d} and series reduced modulo pi.
"""

from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from ..core.errors import NotPiIntegral
from .poly import PolyA, PrimePi, RatK, poly_xgcd
from .series import USeries


class ResidueField:
    """Arithmetic in A/pi.  Elements are polynomials of degree below d."""

    def __init__(self, pi: PrimePi):
        self.pi = pi
        self.base = pi.field
        self.zero = PolyA.zero(self.base)
        self.one = PolyA.one(self.base)

    def __repr__(self):
        return f"ResidueField({self.pi.to_text()})"

    def __reduce__(self):
        return (residue_field, (self.pi,))

    def reduce(self, f: PolyA) -> PolyA:
        if len(f.coeffs) <= self.pi.d:
            return f
        return f % self.pi.pi

    def reduce_rat(self, x: RatK) -> PolyA:
        """Image of a pi-integral element of K"""
        if x.is_zero():
            return self.zero
        den = self.reduce(x.den)
        if den.is_zero():
            raise NotPiIntegral(f"{x.to_text()} has a pole at {self.pi.to_text()}")
        num = self.reduce(x.num)
        if den.is_one():
            return num
        return self.mul(num, self.inv(den))

    def add(self, a: PolyA, b: PolyA) -> PolyA:
        return a + b

    def sub(self, a: PolyA, b: PolyA) -> PolyA:
        return a - b

    def neg(self, a: PolyA) -> PolyA:
        return -a

    def mul(self, a: PolyA, b: PolyA) -> PolyA:
        return self.reduce(a * b)

    def inv(self, a: PolyA) -> PolyA:
        if a.is_zero():
            raise ZeroDivisionError("Zero has no inverse in A/pi")
        g, s, _ = poly_xgcd(a, self.pi.pi)
        if not g.is_one():
            raise ZeroDivisionError(f"{a.to_text()} is not invertible modulo {self.pi.to_text()}")
        return self.reduce(s)

    def div(self, a: PolyA, b: PolyA) -> PolyA:
        return self.mul(a, self.inv(b))

    def from_int(self, n: int) -> PolyA:
        return PolyA.from_int(self.base, n)

    def elem_text(self, a: PolyA) -> str:
        return a.to_text()


@lru_cache(maxsize=None)
def residue_field(pi: PrimePi) -> ResidueField:
    return ResidueField(pi)


class ResSeries:
    """A power series over A/pi known modulo O(u^prec)."""

    __slots__ = ('residues', 'coeffs')

    def __init__(self, residues: ResidueField, coeffs: Sequence[PolyA]):
        self.residues = residues
        self.coeffs: Tuple[PolyA, ...] = tuple(coeffs)

    @property
    def prec(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, index: int) -> PolyA:
        return self.coeffs[index]

    def __eq__(self, other):
        if not isinstance(other, ResSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        shown = [f"({c.to_text()})*u^{i}" for i, c in enumerate(self.coeffs[:6]) if c]
        return f"ResSeries({' + '.join(shown) or '0'} + O(u^{self.prec}))"

    def __add__(self, other: 'ResSeries') -> 'ResSeries':
        n = min(self.prec, other.prec)
        return ResSeries(self.residues, [a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])])

    def __sub__(self, other: 'ResSeries') -> 'ResSeries':
        n = min(self.prec, other.prec)
        return ResSeries(self.residues, [a - b for a, b in zip(self.coeffs[:n], other.coeffs[:n])])

    def __mul__(self, other: 'ResSeries') -> 'ResSeries':
        """Product modulo O(u^min(prec))"""
        n = min(self.prec, other.prec)
        residues = self.residues
        out = [residues.zero] * n
        nonzero = [(j, c) for j, c in enumerate(other.coeffs[:n]) if c.coeffs]
        for i, a in enumerate(self.coeffs[:n]):
            if not a.coeffs:
                continue
            for j, b in nonzero:
                if i + j >= n:
                    break
                out[i + j] = out[i + j] + a * b
        return ResSeries(residues, [residues.reduce(c) for c in out])

    def scale(self, c: PolyA) -> 'ResSeries':
        return ResSeries(self.residues, [self.residues.mul(x, c) for x in self.coeffs])

    @classmethod
    def constant(cls, residues: ResidueField, value: PolyA, prec: int) -> 'ResSeries':
        return cls(residues, [value] + [residues.zero] * (prec - 1))

    def order(self) -> Optional[int]:
        for i, c in enumerate(self.coeffs):
            if c.coeffs:
                return i
        return None

    def is_zero(self) -> bool:
        return self.order() is None

    def to_texts(self) -> List[str]:
        return [c.to_text() for c in self.coeffs]


def series_reduce_mod_pi(f: USeries, pi: PrimePi) -> ResSeries:
    """Coefficientwise image in A/pi; NotPiIntegral on any pole at pi"""
    residues = residue_field(pi)
    return ResSeries(residues, [residues.reduce_rat(c) for c in f.coeffs])
