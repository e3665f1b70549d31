""" drinfeld_forms/operators/oldforms.py

Symbolic level pi oldforms.  An OldPoly is a K-linear combination of
monomials in atoms: a level one generator f, its rescaled image iota(f) =
f(pi z), or DEL(g), the Serre derivative of a W-eigenform g.

The Atkin-Lehner involution acts on atoms by

    f       -> pi^{k/2} iota(f)
    iota(f) -> pi^{-k/2} f
    DEL(g)  -> alpha (DEL(g) - k E* g)      (g of weight k, W g = alpha g)

and multiplicatively on monomials.  Flattening substitutes u-series.
"""

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple, Union

from ..algebra import PolyA, PrimePi, RatK, USeries
from ..core.errors import (FormExpressionError, NotAnEigenform, OddWeightUnsupported,
                           TypeSupportViolation, UnknownForm)
from ..core.logging import logger
from ..forms import GENERATOR_NAMES, FormLibrary, Level, SeriesForm
from .series_ops import half_weight, partial_series, u_operator, v_operator

PLAIN = 'plain'
IOTA = 'iota'


@dataclass(frozen=True)
class Atom:
    """A level one generator, plain or rescaled by z -> pi z"""

    name: str
    weight: int
    type: int
    twist: str = PLAIN

    def sort_key(self) -> Tuple:
        return (0, self.name, self.twist == IOTA)

    def twisted(self) -> 'Atom':
        if self.twist == IOTA:
            raise FormExpressionError(f"iota(iota({self.name})) would need level pi^2")
        return Atom(self.name, self.weight, self.type, IOTA)

    def untwisted(self) -> 'Atom':
        return Atom(self.name, self.weight, self.type, PLAIN)

    def to_text(self) -> str:
        return self.name if self.twist == PLAIN else f"iota({self.name})"


@dataclass(frozen=True)
class DelAtom:
    """The Serre derivative of an OldPoly with W-eigenvalue alpha"""

    inner: 'OldPoly'
    alpha: int

    @property
    def weight(self) -> int:
        return int(self.inner.weight or 0) + 2

    @property
    def type(self) -> int:
        return int(self.inner.type or 0) + 1

    def sort_key(self) -> Tuple:
        return (1, self.inner.to_text(), self.alpha)

    def to_text(self) -> str:
        return f"DEL({self.inner.to_text()})"


AtomLike = Union[Atom, DelAtom]
Monomial = Tuple[Tuple[AtomLike, int], ...]
Scalar = Union[RatK, PolyA, int]


def _mono_key(mono: Monomial) -> Tuple:
    return tuple((atom.sort_key(), e) for atom, e in mono)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    exps: Dict[AtomLike, int] = dict(a)
    for atom, e in b:
        exps[atom] = exps.get(atom, 0) + e
    return tuple(sorted(exps.items(), key=lambda item: item[0].sort_key()))


def _mono_weight(mono: Monomial) -> Tuple[int, int]:
    return sum(atom.weight * e for atom, e in mono), sum(atom.type * e for atom, e in mono)


class OldPoly:
    """A homogeneous combination of atom monomials with coefficients in K."""

    __slots__ = ('pi', 'terms', 'weight', 'type')

    def __init__(self, pi: PrimePi, terms: Dict[Monomial, RatK]):
        self.pi = pi
        field = pi.field
        self.terms: Tuple[Tuple[Monomial, RatK], ...] = tuple(sorted(
            ((m, RatK.coerce(field, c)) for m, c in terms.items() if c),
            key=lambda item: _mono_key(item[0])))
        self.weight: Optional[int] = None
        self.type: Optional[int] = None
        for mono, _ in self.terms:
            weight, type_ = _mono_weight(mono)
            type_ %= field.q - 1
            if self.weight is None:
                self.weight, self.type = weight, type_
            elif (weight, type_) != (self.weight, self.type):
                raise TypeSupportViolation(
                    f"Not homogeneous: weight/type ({weight},{type_}) next to "
                    f"({self.weight},{self.type})")

    # -- construction ------------------------------------------------------

    @classmethod
    def constant(cls, pi: PrimePi, c: Scalar) -> 'OldPoly':
        return cls(pi, {(): RatK.coerce(pi.field, c)})

    @classmethod
    def from_atom(cls, pi: PrimePi, atom: AtomLike, coeff: Scalar = 1) -> 'OldPoly':
        return cls(pi, {((atom, 1),): RatK.coerce(pi.field, coeff)})

    @property
    def field(self):
        return self.pi.field

    def __iter__(self) -> Iterator[Tuple[Monomial, RatK]]:
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not mono for mono, _ in self.terms)

    def atoms(self) -> List[AtomLike]:
        seen: Dict[AtomLike, None] = {}
        for mono, _ in self.terms:
            for atom, _ in mono:
                seen.setdefault(atom, None)
        return list(seen)

    def __eq__(self, other):
        if not isinstance(other, OldPoly):
            return NotImplemented
        return self.pi == other.pi and self.terms == other.terms

    def __hash__(self):
        return hash((self.pi, self.terms))

    def __repr__(self):
        return f"OldPoly({self.to_text()})"

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> 'OldPoly':
        if isinstance(other, OldPoly):
            if other.pi != self.pi:
                raise ValueError("Oldforms at different primes cannot be combined")
            return other
        if isinstance(other, (RatK, PolyA, int)):
            return OldPoly.constant(self.pi, other)
        raise TypeError(f"Cannot combine OldPoly with {type(other).__name__}")

    def __add__(self, other):
        if not isinstance(other, (OldPoly, RatK, PolyA, int)):
            return NotImplemented
        other = self._coerce(other)
        out = dict(self.terms)
        for mono, c in other.terms:
            out[mono] = out[mono] + c if mono in out else c
        return OldPoly(self.pi, out)

    __radd__ = __add__

    def __neg__(self):
        return OldPoly(self.pi, {m: -c for m, c in self.terms})

    def __sub__(self, other):
        if not isinstance(other, (OldPoly, RatK, PolyA, int)):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (RatK, PolyA, int)):
            c = RatK.coerce(self.field, other)
            return OldPoly(self.pi, {m: x * c for m, x in self.terms})
        if not isinstance(other, OldPoly):
            return NotImplemented
        other = self._coerce(other)
        out: Dict[Monomial, RatK] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                mono = _mono_mul(m1, m2)
                value = c1 * c2
                out[mono] = out[mono] + value if mono in out else value
        return OldPoly(self.pi, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, OldPoly):
            if not other.is_constant() or other.is_zero():
                raise FormExpressionError("Only division by nonzero constants is supported")
            other = other.terms[0][1]
        if not isinstance(other, (RatK, PolyA, int)):
            return NotImplemented
        return self * (RatK.one(self.field) / other)

    def __pow__(self, n: int):
        if n < 0:
            if self.is_constant() and not self.is_zero():
                return OldPoly.constant(self.pi, self.terms[0][1] ** n)
            raise FormExpressionError("Negative powers are only defined for constants")
        result = OldPoly.constant(self.pi, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def iota(self) -> 'OldPoly':
        """f(pi z), defined when every atom is a plain generator"""
        out: Dict[Monomial, RatK] = {}
        for mono, c in self.terms:
            twisted = []
            for atom, e in mono:
                if not isinstance(atom, Atom):
                    raise FormExpressionError("iota() of a derivative is not supported")
                twisted.append((atom.twisted(), e))
            out[tuple(sorted(twisted, key=lambda item: item[0].sort_key()))] = c
        return OldPoly(self.pi, out)

    def is_level_one(self) -> bool:
        return all(isinstance(atom, Atom) and atom.twist == PLAIN for atom in self.atoms())

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.terms:
            factors = [atom.to_text() if e == 1 else f"{atom.to_text()}^{e}" for atom, e in mono]
            parts.append("*".join([f"({c.to_text()})"] + factors))
        return " + ".join(parts)


# -- Atkin-Lehner involution --------------------------------------------------


def e_star_poly(pi: PrimePi) -> OldPoly:
    """E* = E - pi iota(E)"""
    e = Atom('E', 2, 1)
    return OldPoly.from_atom(pi, e) - OldPoly.from_atom(pi, e.twisted(), pi.pi)


def _w_atom(atom: AtomLike, pi: PrimePi) -> OldPoly:
    power = RatK.coerce(pi.field, pi.pi)
    if isinstance(atom, Atom):
        half = half_weight(atom.weight)
        if atom.twist == PLAIN:
            return OldPoly.from_atom(pi, atom.twisted(), power ** half)
        return OldPoly.from_atom(pi, atom.untwisted(), power ** (-half))
    k = atom.inner.weight
    if k is None:
        return OldPoly(pi, {})
    if k % 2:
        raise OddWeightUnsupported(f"DEL of odd weight {k}")
    own = OldPoly.from_atom(pi, atom)
    return (own - e_star_poly(pi) * atom.inner * k) * atom.alpha


def w_action(f: OldPoly) -> OldPoly:
    """The Atkin-Lehner involution W_pi on the oldform algebra"""
    if f.weight is not None and f.weight % 2:
        raise OddWeightUnsupported(f"W needs an even weight, got {f.weight}")
    images: Dict[AtomLike, OldPoly] = {}
    total = OldPoly(f.pi, {})
    for mono, c in f.terms:
        term = OldPoly.constant(f.pi, c)
        for atom, e in mono:
            if atom not in images:
                images[atom] = _w_atom(atom, f.pi)
            term = term * (images[atom] ** e)
        total = total + term
    return total


def eigenvalue(f: OldPoly) -> Optional[int]:
    """+1 or -1 when W f = +-f exactly, else None"""
    if f.is_zero():
        return None
    image = w_action(f)
    if image == f:
        return 1
    if image == -f:
        return -1
    return None


def _pair(f: OldPoly, sign: int) -> OldPoly:
    if not f.is_level_one():
        raise FormExpressionError("Oldform pairs are built from level one expressions")
    k = f.weight or 0
    return f + f.iota() * (RatK.coerce(f.field, f.pi.pi) ** half_weight(k)) * sign


def plus_pair(f: OldPoly) -> OldPoly:
    """f + pi^{k/2} f(pi z), a W-eigenvector with eigenvalue +1"""
    return _pair(f, 1)


def minus_pair(f: OldPoly) -> OldPoly:
    """f - pi^{k/2} f(pi z), a W-eigenvector with eigenvalue -1"""
    return _pair(f, -1)


def del_poly(f: OldPoly) -> OldPoly:
    """DEL(f) as an OldPoly; f must be a W-eigenvector"""
    alpha = eigenvalue(f)
    if alpha is None:
        raise NotAnEigenform(f"{f.to_text()} is not a W-eigenvector")
    return OldPoly.from_atom(f.pi, DelAtom(f, alpha))


# -- the algebra bound to series -----------------------------------------------


class OldformAlgebra:
    """Builds oldforms over one prime and turns them into u-series."""

    def __init__(self, library: FormLibrary, pi: PrimePi):
        if library.field.spec != pi.field.spec:
            raise ValueError("Library and prime live over different fields")
        self.library = library
        self.pi = pi
        self.field = pi.field
        q = self.field.q
        self.weights: Dict[str, Tuple[int, int]] = {
            'g1': (q - 1, 0),
            'h': (q + 1, 1),
            'delta': (q * q - 1, 0),
            'gd': (pi.norm - 1, 0),
            'E': (2, 1),
        }

    def __repr__(self):
        return f"OldformAlgebra({self.pi.to_text()})"

    def generator(self, name: str) -> OldPoly:
        if name == 'Estar':
            return self.e_star()
        if name not in self.weights:
            raise UnknownForm(f"Unknown form {name!r}, expected one of {', '.join(GENERATOR_NAMES)}")
        weight, type_ = self.weights[name]
        return OldPoly.from_atom(self.pi, Atom(name, weight, type_))

    def constant(self, c: Scalar) -> OldPoly:
        return OldPoly.constant(self.pi, c)

    def e_star(self) -> OldPoly:
        return e_star_poly(self.pi)

    def pi_power(self, exponent: int) -> RatK:
        return RatK.coerce(self.field, self.pi.pi) ** exponent

    def gk_form(self, k: int) -> OldPoly:
        """g_(k) = (g_d - pi^{q^d-1} iota(g_d))^{k-1}, congruent to 1 modulo pi"""
        if k < 2:
            raise ValueError(f"g_(k) needs k >= 2, got {k}")
        gd = self.generator('gd')
        return (gd - gd.iota() * self.pi_power(self.pi.norm - 1)) ** (k - 1)

    # -- flattening --------------------------------------------------------

    def _atom_power(self, atom: AtomLike, e: int, prec: int,
                    memo: Dict[Tuple[AtomLike, int, int], USeries]) -> USeries:
        key = (atom, e, prec)
        if key in memo:
            return memo[key]
        if isinstance(atom, Atom):
            if atom.twist == PLAIN:
                value = self.library.power(atom.name, e, self.pi, prec)
            else:
                inner_prec = -(-prec // self.pi.norm)
                base = self.library.power(atom.name, e, self.pi, inner_prec)
                value = v_operator(base, self.pi, prec)
        else:
            inner = self.flatten(atom.inner, prec)
            e_series = self.library.e(prec).series
            value = partial_series(inner, int(atom.inner.weight or 0), e_series)
            for _ in range(e - 1):
                value = (value * partial_series(inner, int(atom.inner.weight or 0),
                                                e_series)).truncate(prec)
        memo[key] = value
        return value

    def flatten(self, f: OldPoly, prec: int) -> USeries:
        """The u-series of an oldform, known to O(u^prec)"""
        memo: Dict[Tuple[AtomLike, int, int], USeries] = {}
        total = USeries.zero(self.field, prec)
        for mono, c in f.terms:
            term = USeries.constant(self.field, c, prec)
            for atom, e in mono:
                term = (term * self._atom_power(atom, e, prec, memo)).truncate(prec)
            total = total + term
        return total

    def flatten_form(self, f: OldPoly, prec: int, name: str = "") -> SeriesForm:
        level = Level.one() if f.is_level_one() else Level.at(self.pi)
        return SeriesForm(self.flatten(f, prec), int(f.weight or 0), int(f.type or 0),
                          level, name)

    def trace_level_one(self, f: OldPoly, prec: int) -> USeries:
        """Tr(f) = f + pi^{1-k/2} U(W f), known to O(u^prec)"""
        k = int(f.weight or 0)
        half = half_weight(k)
        first = self.flatten(f, prec)
        image = self.flatten(w_action(f), prec * self.pi.norm)
        second = u_operator(image, self.pi).truncate(prec).scale(self.pi_power(1 - half))
        logger.debug(f"Traced a weight {k} oldform to level one at O(u^{prec})")
        return first + second

    def trace_form(self, f: OldPoly, prec: int, name: str = "") -> SeriesForm:
        return SeriesForm(self.trace_level_one(f, prec), int(f.weight or 0),
                          int(f.type or 0), Level.one(), name)
