""" drinfeld_forms/structure/isobaric.py

Level one forms as isobaric polynomials phi(X, Y) with X = g1 and Y = h.

The monomials of one weight and type step from (i, j) to (i - (q+1), j + (q-1)),
so phi = X^{i_min} Y^{j_min} P(Y^{q-1} / X^{q+1}) for a univariate P with
P(0) != 0.  Products of isobaric polynomials multiply the P's, and that is
how divisibility and common factors are decided.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..algebra import (INFINITY, PolyA, PrimePi, RatK, ResidueField, USeries,
                       residue_field)
from ..core.errors import InsufficientPrecision, NotInSpan
from ..core.logging import logger
from ..forms import FormLibrary, SeriesForm

Monomial = Tuple[int, int]

MIN_MARGIN = 8


def enumerate_monomials(q: int, k: int, l: int) -> List[Monomial]:  # noqa: E741
    """All (i, j) with (q-1)i + (q+1)j = k and j = l (mod q-1), by j ascending"""
    out = []
    j = 0
    while (q + 1) * j <= k:
        rest = k - (q + 1) * j
        if rest % (q - 1) == 0 and (j - l) % (q - 1) == 0:
            out.append((rest // (q - 1), j))
        j += 1
    return out


def _monomial_text(mono: Monomial) -> str:
    i, j = mono
    parts = []
    if i:
        parts.append("X" if i == 1 else f"X^{i}")
    if j:
        parts.append("Y" if j == 1 else f"Y^{j}")
    return "*".join(parts) or "1"


@dataclass(frozen=True)
class IsobarPoly:
    """Isobaric polynomial over K, terms sorted by the exponent of Y"""

    q: int
    weight: int
    type: int
    terms: Tuple[Tuple[Monomial, RatK], ...]

    def __post_init__(self):
        q = self.q
        for (i, j), _ in self.terms:
            if (q - 1) * i + (q + 1) * j != self.weight or (j - self.type) % (q - 1):
                raise ValueError(f"Monomial {_monomial_text((i, j))} is not of weight "
                                 f"{self.weight} and type {self.type}")

    @classmethod
    def from_dict(cls, q: int, weight: int, type_: int,
                  coeffs: Dict[Monomial, RatK]) -> 'IsobarPoly':
        terms = tuple(sorted(((m, c) for m, c in coeffs.items() if c), key=lambda t: t[0][1]))
        return cls(q, weight, type_ % (q - 1), terms)

    def coefficient(self, i: int, j: int) -> Optional[RatK]:
        for mono, c in self.terms:
            if mono == (i, j):
                return c
        return None

    def is_zero(self) -> bool:
        return not self.terms

    def __mul__(self, other: 'IsobarPoly') -> 'IsobarPoly':
        out: Dict[Monomial, RatK] = {}
        for (i1, j1), a in self.terms:
            for (i2, j2), b in other.terms:
                mono = (i1 + i2, j1 + j2)
                out[mono] = out[mono] + a * b if mono in out else a * b
        return IsobarPoly.from_dict(self.q, self.weight + other.weight,
                                    self.type + other.type, out)

    def to_triples(self) -> List[List[Union[int, str]]]:
        return [[i, j, c.to_text()] for (i, j), c in self.terms]

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c.to_text()})*{_monomial_text(m)}" for m, c in self.terms)

    def expand(self, library: FormLibrary, prec: int) -> USeries:
        """phi(g1, h) as a u-series"""
        total = None
        for (i, j), c in self.terms:
            term = library.monomial(i, j, prec).scale(c)
            total = term if total is None else total + term
        if total is None:
            return USeries.zero(library.field, prec)
        return total


@dataclass(frozen=True)
class ResIsobarPoly:
    """Isobaric polynomial with coefficients in A/pi"""

    residues: ResidueField
    q: int
    weight: int
    type: int
    terms: Tuple[Tuple[Monomial, PolyA], ...]

    def is_zero(self) -> bool:
        return not self.terms

    def to_triples(self) -> List[List[Union[int, str]]]:
        return [[i, j, c.to_text()] for (i, j), c in self.terms]

    def encode(self) -> Tuple[int, int, List[PolyA]]:
        """(i_min, j_min, P) with self = X^{i_min} Y^{j_min} P(Y^{q-1}/X^{q+1})"""
        if not self.terms:
            raise ValueError("The zero polynomial has no encoding")
        q = self.q
        j_min = self.terms[0][0][1]
        i_min = self.terms[-1][0][0]
        length = (self.terms[-1][0][1] - j_min) // (q - 1) + 1
        coeffs = [self.residues.zero] * length
        for (_, j), c in self.terms:
            coeffs[(j - j_min) // (q - 1)] = c
        return i_min, j_min, coeffs

    @classmethod
    def decode(cls, residues: ResidueField, q: int, weight: int, type_: int,
               j_min: int, coeffs: Sequence[PolyA]) -> 'ResIsobarPoly':
        terms = []
        for m, c in enumerate(coeffs):
            if c.coeffs:
                j = j_min + m * (q - 1)
                terms.append((((weight - (q + 1) * j) // (q - 1), j), c))
        return cls(residues, q, weight, type_ % (q - 1), tuple(terms))


def _trim(coeffs: List[PolyA]) -> List[PolyA]:
    while coeffs and not coeffs[-1].coeffs:
        coeffs.pop()
    return coeffs


def upoly_divmod(residues: ResidueField, num: Sequence[PolyA],
                 den: Sequence[PolyA]) -> Tuple[List[PolyA], List[PolyA]]:
    """Division with remainder in (A/pi)[y], coefficients low to high"""
    den = _trim(list(den))
    if not den:
        raise ZeroDivisionError("Division by the zero polynomial")
    rem = _trim(list(num))
    if len(rem) < len(den):
        return [], rem
    inv_lead = residues.inv(den[-1])
    quot = [residues.zero] * (len(rem) - len(den) + 1)
    for shift in range(len(quot) - 1, -1, -1):
        c = rem[shift + len(den) - 1]
        if not c.coeffs:
            continue
        c = residues.mul(c, inv_lead)
        quot[shift] = c
        for j, d in enumerate(den):
            rem[shift + j] = residues.sub(rem[shift + j], residues.mul(c, d))
    return _trim(quot), _trim(rem[:len(den) - 1])


def upoly_gcd(residues: ResidueField, a: Sequence[PolyA], b: Sequence[PolyA]) -> List[PolyA]:
    """Monic gcd in (A/pi)[y]"""
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, upoly_divmod(residues, a, b)[1]
    if not a:
        return a
    inv = residues.inv(a[-1])
    return [residues.mul(c, inv) for c in a]


def isobaric_solve(form: SeriesForm, library: FormLibrary) -> IsobarPoly:
    """The isobaric polynomial of a level one form.

    ord(g1^i h^j) = j with leading coefficient (-1)^j, so the coefficients
    come out one at a time in increasing j; the residual must then vanish."""
    if not form.level.is_one:
        raise NotInSpan(f"Only level one forms have an isobaric polynomial, got {form.level.tag}")
    field = form.field
    q = field.q
    monos = enumerate_monomials(q, form.weight, form.type)
    margin = max(MIN_MARGIN, len(monos))
    needed = (monos[-1][1] if monos else 0) + margin
    if form.prec < needed:
        raise InsufficientPrecision(
            f"Solving weight {form.weight} needs O(u^{needed}), have O(u^{form.prec})")
    prec = form.prec
    residual = list(form.series.coeffs)
    coeffs: Dict[Monomial, RatK] = {}
    for i, j in monos:
        c = residual[j] if j % 2 == 0 else -residual[j]
        if not c:
            continue
        coeffs[(i, j)] = c
        mono = library.monomial(i, j, prec)
        for e in range(j, prec):
            x = mono.coeffs[e]
            if x.num.coeffs:
                residual[e] = residual[e] - c * x
    for e, c in enumerate(residual):
        if c:
            raise NotInSpan(f"{form.name or 'form'} of weight {form.weight} leaves "
                            f"{c.to_text()} at u^{e} outside the span of g1^i h^j")
    logger.debug(f"Solved {form.name or 'form'} in {len(monos)} monomials")
    return IsobarPoly.from_dict(q, form.weight, form.type, coeffs)


def reduce_isobaric(phi: IsobarPoly, pi: PrimePi) -> ResIsobarPoly:
    residues = residue_field(pi)
    terms = []
    for mono, c in phi.terms:
        r = residues.reduce_rat(c)
        if r.coeffs:
            terms.append((mono, r))
    return ResIsobarPoly(residues, phi.q, phi.weight, phi.type, tuple(terms))


def isobaric_divide_power(phi: ResIsobarPoly,
                          a: ResIsobarPoly) -> Tuple[Union[int, float], Optional[ResIsobarPoly]]:
    """Largest e with a^e | phi and the quotient phi / a^e.

    Returns (+inf, None) for phi = 0."""
    if a.is_zero() or a.weight <= 0:
        raise ValueError("Divisor must be a nonzero isobaric polynomial of positive weight")
    if phi.is_zero():
        return INFINITY, None
    residues, q = phi.residues, phi.q
    ai, aj, ap = a.encode()
    current = phi
    e = 0
    while current.weight >= a.weight:
        ci, cj, cp = current.encode()
        if ci < ai or cj < aj:
            break
        quot, rem = upoly_divmod(residues, cp, ap)
        if rem:
            break
        current = ResIsobarPoly.decode(residues, q, current.weight - a.weight,
                                       current.type - a.type, cj - aj, quot)
        e += 1
    return e, current


def isobaric_coprime(a: ResIsobarPoly, b: ResIsobarPoly) -> bool:
    """True when a and b share no common factor in (A/pi)[X, Y]"""
    if a.is_zero() or b.is_zero():
        return False
    ai, aj, ap = a.encode()
    bi, bj, bp = b.encode()
    if ai and bi:
        return False
    if aj and bj:
        return False
    return len(upoly_gcd(a.residues, ap, bp)) == 1
