""" drinfeld_forms/algebra/field.py

Finite fields F_q with q = p^r and p odd.  An element is stored as an integer
code: the residue polynomial d_0 + d_1 z + ... + d_{r-1} z^{r-1} over F_p is
encoded as d_0 + d_1 p + ... + d_{r-1} p^{r-1}.  Constants of F_p therefore
keep their usual integer value, and all arithmetic goes through lookup tables
built once per field.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

from sympy import factorint, isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_rem

from ..core.errors import InvalidFieldSpec
from ..core.logging import logger

FqElem = int


def _to_gf(coeffs: Sequence[int], p: int) -> list:
    """Low-to-high coefficients as a dense galoistools polynomial"""
    dense = [ZZ(c % p) for c in reversed(coeffs)]
    while dense and not dense[0]:
        dense.pop(0)
    return dense


def _from_gf(dense: list) -> List[int]:
    return [int(c) for c in reversed(dense)]


def fp_rem(num: Sequence[int], den: Sequence[int], p: int) -> List[int]:
    """Remainder of num by den over F_p, both low-to-high"""
    return _from_gf(gf_rem(_to_gf(num, p), _to_gf(den, p), p, ZZ))


def is_irreducible_over_fp(modulus: Sequence[int], p: int) -> bool:
    """Monic and irreducible over F_p, coefficients low-to-high"""
    if len(modulus) < 2 or modulus[-1] % p != 1:
        return False
    return bool(gf_irreducible_p(_to_gf(modulus, p), p, ZZ))


def smallest_irreducible(p: int, r: int) -> Tuple[int, ...]:
    """Returns the first monic irreducible of degree r over F_p when the lower
    coefficients c_0..c_{r-1} are read as the base-p integer sum c_j p^j"""
    for code in range(p ** r):
        lower = [(code // p ** j) % p for j in range(r)]
        candidate = tuple(lower + [1])
        if is_irreducible_over_fp(candidate, p):
            return candidate
    raise InvalidFieldSpec(f"No irreducible polynomial of degree {r} over F_{p}")  # pragma: no cover


@dataclass(frozen=True)
class FieldSpec:
    """Defines the finite field F_q, q = p^r, together with the modulus used
    for r > 1 (coefficients low-to-high, monic)."""

    p: int
    r: int = 1
    modulus: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p == 2 or not isprime(self.p):
            raise InvalidFieldSpec(f"Characteristic must be an odd prime, got {self.p}")
        if self.r < 1:
            raise InvalidFieldSpec(f"Degree r must be positive, got {self.r}")
        if self.r == 1:
            if self.modulus is not None and tuple(self.modulus) != (0, 1):
                raise InvalidFieldSpec("A modulus is only meaningful when r > 1")
            object.__setattr__(self, 'modulus', None)
            return
        if self.modulus is None:
            object.__setattr__(self, 'modulus', smallest_irreducible(self.p, self.r))
            return
        modulus = tuple(c % self.p for c in self.modulus)
        if len(modulus) != self.r + 1 or not is_irreducible_over_fp(modulus, self.p):
            raise InvalidFieldSpec(
                f"Modulus {self.modulus} is not a monic irreducible of degree {self.r}")
        object.__setattr__(self, 'modulus', modulus)

    @property
    def q(self) -> int:
        return self.p ** self.r

    @classmethod
    def from_order(cls, q: int, r: Optional[int] = None,
                   modulus: Optional[Tuple[int, ...]] = None) -> 'FieldSpec':
        """Builds the spec of F_q from the field order q"""
        factors = factorint(q) if q > 1 else {}
        if len(factors) != 1:
            raise InvalidFieldSpec(f"Field order {q} is not a prime power")
        (p, exponent), = factors.items()
        if r is not None and r != exponent:
            raise InvalidFieldSpec(f"Field order {q} is {p}^{exponent}, not {p}^{r}")
        return cls(p=int(p), r=int(exponent), modulus=modulus)


class FiniteField:
    """Table driven arithmetic in F_q.  Use finite_field() to obtain the shared
    instance for a FieldSpec."""

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p = spec.p
        self.r = spec.r
        self.q = spec.q
        q, p, r = self.q, self.p, self.r

        self._digits = [tuple((c // p ** j) % p for j in range(r)) for c in range(q)]
        self._place = [p ** j for j in range(2 * r - 1)]

        # z^m reduced by the modulus, for m < 2r - 1
        self.xpow: List[int] = []
        for m in range(2 * r - 1):
            coeffs = [0] * m + [1]
            if r > 1:
                coeffs = fp_rem(coeffs, spec.modulus, p)  # type: ignore[arg-type]
            self.xpow.append(self._from_digits(coeffs))

        self.add_table = [[self._from_digits([(x + y) % p for x, y in zip(da, db)])
                           for db in self._digits] for da in self._digits]
        self.neg_table = [self._from_digits([-x % p for x in da]) for da in self._digits]
        self.sub_table = [[row[self.neg_table[b]] for b in range(q)] for row in self.add_table]
        self.mul_table = [[self._mul_digits(da, db) for db in self._digits]
                          for da in self._digits]
        self.inv_table = [0] * q
        for a in range(1, q):
            self.inv_table[a] = self.mul_table[a].index(1)
        self.frob_table = [self.pow(a, p) for a in range(q)]
        logger.debug(f"Built arithmetic tables for F_{q}")

    def __repr__(self):
        return f"FiniteField(p={self.p}, r={self.r})"

    def __reduce__(self):
        return (finite_field, (self.spec,))

    def _from_digits(self, digits) -> int:
        return sum(d * self._place[j] for j, d in enumerate(digits))

    def _mul_digits(self, da, db) -> int:
        p = self.p
        prod = [0] * (2 * self.r - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return self.reduce_digits([c % p for c in prod])

    def reduce_digits(self, digits) -> int:
        """Maps a residue polynomial of degree < 2r - 1 over F_p to its code"""
        if self.r == 1:
            return digits[0] % self.p if digits else 0
        # Runs while mul_table is being built, so it folds digit vectors over F_p
        p = self.p
        acc = [0] * self.r
        for m, d in enumerate(digits):
            if d % p:
                acc = [(a + d * x) % p for a, x in zip(acc, self._digits[self.xpow[m]])]
        return self._from_digits(acc)

    def digits(self, a: FqElem) -> Tuple[int, ...]:
        return self._digits[a]

    def from_int(self, n: int) -> FqElem:
        return n % self.p

    @property
    def generator(self) -> FqElem:
        """The class of z, which generates F_q over F_p"""
        return self.xpow[1] if self.r > 1 else 1

    def elements(self) -> Iterator[FqElem]:
        return iter(range(self.q))

    def add(self, a: FqElem, b: FqElem) -> FqElem:
        return self.add_table[a][b]

    def sub(self, a: FqElem, b: FqElem) -> FqElem:
        return self.sub_table[a][b]

    def neg(self, a: FqElem) -> FqElem:
        return self.neg_table[a]

    def mul(self, a: FqElem, b: FqElem) -> FqElem:
        return self.mul_table[a][b]

    def inv(self, a: FqElem) -> FqElem:
        if a == 0:
            raise ZeroDivisionError("Zero has no inverse in F_q")
        return self.inv_table[a]

    def div(self, a: FqElem, b: FqElem) -> FqElem:
        return self.mul_table[a][self.inv(b)]

    def pow(self, a: FqElem, n: int) -> FqElem:
        if n < 0:
            a, n = self.inv(a), -n
        result, base = 1, a
        while n:
            if n & 1:
                result = self.mul_table[result][base]
            base = self.mul_table[base][base]
            n >>= 1
        return result

    def frobenius(self, a: FqElem) -> FqElem:
        return self.frob_table[a]

    def elem_text(self, a: FqElem) -> str:
        """Canonical text: the integer for F_p constants, "(…)" in z otherwise"""
        if a < self.p:
            return str(a)
        terms = []
        for e in range(self.r - 1, -1, -1):
            d = self._digits[a][e]
            if not d:
                continue
            if e == 0:
                terms.append(str(d))
            else:
                mono = "z" if e == 1 else f"z^{e}"
                terms.append(mono if d == 1 else f"{d}*{mono}")
        return "(" + "+".join(terms) + ")"


@lru_cache(maxsize=None)
def finite_field(spec: FieldSpec) -> FiniteField:
    return FiniteField(spec)
