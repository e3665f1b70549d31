""" drinfeld_forms/algebra/poly.py

The polynomial ring A = F_q[T], its fraction field K = F_q(T), monic primes
of A and pi-adic valuations.  Polynomials are immutable tuples of field codes,
lowest degree first, with no trailing zeros.
"""

import math
from itertools import product
from typing import Iterator, Tuple, Union

from ..core.errors import NotIrreducible
from .field import FiniteField, FqElem, is_irreducible_over_fp

KRONECKER_CUTOFF = 16

INFINITY = math.inf


def _strip(coeffs) -> Tuple[int, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


def _schoolbook(field: FiniteField, a, b) -> Tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    if field.r == 1:
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        p = field.p
        return _strip([c % p for c in out])
    mul, add = field.mul_table, field.add_table
    for i, x in enumerate(a):
        if x:
            row = mul[x]
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add[out[i + j]][row[y]]
    return _strip(out)


def _kronecker(field: FiniteField, a, b) -> Tuple[int, ...]:
    """Multiplies by packing both operands into integers.

    Each F_q coefficient is spread over 2r - 1 slots holding its F_p digits,
    so one big integer product computes every digit convolution at once."""
    p, r = field.p, field.r
    span = 2 * r - 1
    bound = min(len(a), len(b)) * r * (p - 1) ** 2
    width = bound.bit_length() // 8 + 1
    pad = bytes(width * (r - 1))

    def pack(coeffs) -> int:
        if r == 1:
            return int.from_bytes(b''.join(c.to_bytes(width, 'little') for c in coeffs), 'little')
        chunks = []
        for c in coeffs:
            chunks.extend(d.to_bytes(width, 'little') for d in field.digits(c))
            chunks.append(pad)
        return int.from_bytes(b''.join(chunks), 'little')

    length = len(a) + len(b) - 1
    raw = (pack(a) * pack(b)).to_bytes(width * span * length, 'little')
    out = []
    for i in range(length):
        base = i * span * width
        digits = [int.from_bytes(raw[base + m * width:base + (m + 1) * width], 'little') % p
                  for m in range(span)]
        out.append(field.reduce_digits(digits))
    return _strip(out)


def mul_coeffs(field: FiniteField, a, b) -> Tuple[int, ...]:
    if not a or not b:
        return ()
    if len(a) < KRONECKER_CUTOFF or len(b) < KRONECKER_CUTOFF:
        return _schoolbook(field, a, b)
    return _kronecker(field, a, b)


class PolyA:
    """An element of A = F_q[T]."""

    __slots__ = ('field', 'coeffs')

    def __init__(self, field: FiniteField, coeffs=()):
        self.field = field
        # Out-of-range ints are integers of F_p, anything else is a field code
        self.coeffs = _strip([field.from_int(c) if c < 0 or c >= field.q else c for c in coeffs])

    @classmethod
    def _make(cls, field: FiniteField, coeffs: Tuple[int, ...]) -> 'PolyA':
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = coeffs
        return obj

    @classmethod
    def zero(cls, field: FiniteField) -> 'PolyA':
        return cls._make(field, ())

    @classmethod
    def one(cls, field: FiniteField) -> 'PolyA':
        return cls._make(field, (1,))

    @classmethod
    def constant(cls, field: FiniteField, c: FqElem) -> 'PolyA':
        return cls._make(field, (c,) if c else ())

    @classmethod
    def from_int(cls, field: FiniteField, n: int) -> 'PolyA':
        return cls.constant(field, field.from_int(n))

    @classmethod
    def T(cls, field: FiniteField, exponent: int = 1) -> 'PolyA':  # pylint: disable=invalid-name
        return cls._make(field, (0,) * exponent + (1,))

    # -- basic properties -------------------------------------------------

    @property
    def degree(self) -> Union[int, float]:
        """Degree in T, -inf for the zero polynomial"""
        return len(self.coeffs) - 1 if self.coeffs else -INFINITY

    @property
    def lc(self) -> FqElem:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, PolyA):
            return self.coeffs == other.coeffs and self.field.spec == other.field.spec
        if isinstance(other, int):
            return self.coeffs == PolyA.from_int(self.field, other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"PolyA({self.to_text()})"

    def __str__(self):
        return self.to_text()

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other) -> 'PolyA':
        if isinstance(other, PolyA):
            return other
        if isinstance(other, int):
            return PolyA.from_int(self.field, other)
        raise TypeError(f"Cannot combine PolyA with {type(other).__name__}")

    def __add__(self, other):
        if not isinstance(other, (PolyA, int)):
            return NotImplemented
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        add = self.field.add_table
        out = list(a)
        for i, y in enumerate(b):
            out[i] = add[out[i]][y]
        return PolyA._make(self.field, _strip(out))

    __radd__ = __add__

    def __neg__(self):
        neg = self.field.neg_table
        return PolyA._make(self.field, tuple(neg[c] for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, (PolyA, int)):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(self.field.from_int(other))
        if not isinstance(other, PolyA):
            return NotImplemented
        return PolyA._make(self.field, mul_coeffs(self.field, self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def scale(self, c: FqElem) -> 'PolyA':
        """Multiplies by the F_q element with code c"""
        if c == 0:
            return PolyA.zero(self.field)
        row = self.field.mul_table[c]
        return PolyA._make(self.field, tuple(row[x] for x in self.coeffs))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("Negative powers of a polynomial live in K, use RatK")
        result, base = PolyA.one(self.field), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("Polynomial division by zero")
        field = self.field
        lb = len(other.coeffs)
        if len(self.coeffs) < lb:
            return PolyA.zero(field), self
        mul, sub = field.mul_table, field.sub_table
        rem = list(self.coeffs)
        quot = [0] * (len(rem) - lb + 1)
        inv_lc = field.inv(other.coeffs[-1])
        for shift in range(len(quot) - 1, -1, -1):
            c = rem[shift + lb - 1]
            if c:
                c = mul[c][inv_lc]
                quot[shift] = c
                row = mul[c]
                for j, y in enumerate(other.coeffs):
                    rem[shift + j] = sub[rem[shift + j]][row[y]]
        return PolyA._make(field, _strip(quot)), PolyA._make(field, _strip(rem[:lb - 1]))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: 'PolyA') -> bool:
        return (other % self).is_zero()

    def monic(self) -> 'PolyA':
        if self.is_zero() or self.is_monic():
            return self
        return self.scale(self.field.inv(self.lc))

    # -- Frobenius style maps ---------------------------------------------

    def substitute_power(self, e: int) -> 'PolyA':
        """Returns f(T^e)"""
        if len(self.coeffs) <= 1 or e == 1:
            return self
        out = [0] * ((len(self.coeffs) - 1) * e + 1)
        for i, c in enumerate(self.coeffs):
            out[i * e] = c
        return PolyA._make(self.field, tuple(out))

    def frobenius_q(self) -> 'PolyA':
        """f^q, which is f(T^q) because F_q is fixed by the q-power map"""
        return self.substitute_power(self.field.q)

    def frobenius_p(self) -> 'PolyA':
        """f^p: coefficients raised to the p-th power and T replaced by T^p"""
        frob = self.field.frob_table
        raised = PolyA._make(self.field, tuple(frob[c] for c in self.coeffs))
        return raised.substitute_power(self.field.p)

    # -- text -------------------------------------------------------------

    def to_text(self) -> str:
        """Canonical form such as "T^2+2*T+1", exponents descending"""
        if not self.coeffs:
            return "0"
        terms = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            ctext = self.field.elem_text(c)
            if e == 0:
                terms.append(ctext)
                continue
            mono = "T" if e == 1 else f"T^{e}"
            terms.append(mono if c == 1 else f"{ctext}*{mono}")
        return "+".join(terms)


def poly_gcd(a: PolyA, b: PolyA) -> PolyA:
    """Monic greatest common divisor (zero only when both inputs are zero)"""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: PolyA, b: PolyA) -> Tuple[PolyA, PolyA, PolyA]:
    """Returns (g, s, t) with s*a + t*b = g and g monic"""
    field = a.field
    r0, r1 = a, b
    s0, s1 = PolyA.one(field), PolyA.zero(field)
    t0, t1 = PolyA.zero(field), PolyA.one(field)
    while not r1.is_zero():
        quot, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quot * s1
        t0, t1 = t1, t0 - quot * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = field.inv(r0.lc)
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def monic_polys(field: FiniteField, degree: int) -> Iterator[PolyA]:
    """Monic polynomials of one degree, lexicographic with the constant coefficient last"""
    for lower in product(range(field.q), repeat=degree):
        yield PolyA._make(field, tuple(reversed(lower)) + (1,))


def monic_polys_upto(field: FiniteField, max_degree: int) -> Iterator[PolyA]:
    for degree in range(max_degree + 1):
        yield from monic_polys(field, degree)


class PrimePi:
    """A monic irreducible pi of A, with d its degree."""

    __slots__ = ('pi', 'd')

    def __init__(self, pi: PolyA):
        if not pi.is_monic() or len(pi.coeffs) < 2:
            raise NotIrreducible(f"{pi.to_text()} is not a monic polynomial of positive degree")
        d = len(pi.coeffs) - 1
        if pi.field.r == 1:
            if not is_irreducible_over_fp(pi.coeffs, pi.field.p):
                raise NotIrreducible(f"{pi.to_text()} factors over F_{pi.field.p}")
        else:
            # Codes of F_q with r > 1 are not residues mod a prime, so divide by hand
            for div_degree in range(1, d // 2 + 1):
                for divisor in monic_polys(pi.field, div_degree):
                    if divisor.divides(pi):
                        raise NotIrreducible(
                            f"{pi.to_text()} is divisible by {divisor.to_text()}")
        self.pi = pi
        self.d = d

    @property
    def field(self) -> FiniteField:
        return self.pi.field

    @property
    def norm(self) -> int:
        """q^d, the size of the residue field A/pi"""
        return self.field.q ** self.d

    def __eq__(self, other):
        return isinstance(other, PrimePi) and self.pi == other.pi

    def __hash__(self):
        return hash(self.pi)

    def __repr__(self):
        return f"PrimePi({self.pi.to_text()})"

    def to_text(self) -> str:
        return self.pi.to_text()


def poly_ord_at(f: PolyA, pi: PrimePi) -> Union[int, float]:
    """Largest e with pi^e dividing f, +inf for f = 0"""
    if f.is_zero():
        return INFINITY
    e = 0
    while True:
        quot, rem = divmod(f, pi.pi)
        if not rem.is_zero():
            return e
        f, e = quot, e + 1


class RatK:
    """An element num/den of K = F_q(T) with den monic and gcd(num, den) = 1."""

    __slots__ = ('num', 'den')

    def __init__(self, num: PolyA, den: Union[PolyA, None] = None):
        if den is None or den.is_one():
            self.num, self.den = num, den if den is not None else PolyA.one(num.field)
            return
        if den.is_zero():
            raise ZeroDivisionError("Denominator of a RatK must be nonzero")
        g = poly_gcd(num, den)
        if not g.is_one():
            num, den = num // g, den // g
        if not den.is_monic():
            inv = num.field.inv(den.lc)
            num, den = num.scale(inv), den.scale(inv)
        self.num, self.den = num, den

    @classmethod
    def _make(cls, num: PolyA, den: PolyA) -> 'RatK':
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def zero(cls, field: FiniteField) -> 'RatK':
        return cls._make(PolyA.zero(field), PolyA.one(field))

    @classmethod
    def one(cls, field: FiniteField) -> 'RatK':
        return cls._make(PolyA.one(field), PolyA.one(field))

    @classmethod
    def from_int(cls, field: FiniteField, n: int) -> 'RatK':
        return cls._make(PolyA.from_int(field, n), PolyA.one(field))

    @classmethod
    def coerce(cls, field: FiniteField, value) -> 'RatK':
        if isinstance(value, RatK):
            return value
        if isinstance(value, PolyA):
            return cls._make(value, PolyA.one(field))
        if isinstance(value, int):
            return cls.from_int(field, value)
        raise TypeError(f"Cannot interpret {type(value).__name__} as an element of K")

    @property
    def field(self) -> FiniteField:
        return self.num.field

    def is_zero(self) -> bool:
        return not self.num.coeffs

    def is_integral(self) -> bool:
        return self.den.coeffs == (1,)

    def __bool__(self):
        return bool(self.num.coeffs)

    def __eq__(self, other):
        if isinstance(other, RatK):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (PolyA, int)):
            return self == RatK.coerce(self.field, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        return f"RatK({self.to_text()})"

    def __str__(self):
        return self.to_text()

    def __add__(self, other):
        if not isinstance(other, RatK):
            if not isinstance(other, (PolyA, int)):
                return NotImplemented
            other = RatK.coerce(self.field, other)
        if self.den.coeffs == (1,) and other.den.coeffs == (1,):
            return RatK._make(self.num + other.num, self.den)
        if not other.num.coeffs:
            return self
        if not self.num.coeffs:
            return other
        if self.den == other.den:
            return RatK(self.num + other.num, self.den)
        return RatK(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatK._make(-self.num, self.den)

    def __sub__(self, other):
        if not isinstance(other, (RatK, PolyA, int)):
            return NotImplemented
        return self + (-RatK.coerce(self.field, other))

    def __rsub__(self, other):
        if not isinstance(other, (PolyA, int)):
            return NotImplemented
        return RatK.coerce(self.field, other) - self

    def __mul__(self, other):
        if not isinstance(other, RatK):
            if isinstance(other, int):
                if other % self.field.p == 0:
                    return RatK.zero(self.field)
                return RatK._make(self.num * other, self.den)
            if not isinstance(other, PolyA):
                return NotImplemented
            other = RatK.coerce(self.field, other)
        a, b, c, d = self.num, self.den, other.num, other.den
        if b.coeffs == (1,) and d.coeffs == (1,):
            return RatK._make(a * c, b)
        if not a.coeffs or not c.coeffs:
            return RatK.zero(self.field)
        g1 = poly_gcd(a, d)
        g2 = poly_gcd(c, b)
        if not g1.is_one():
            a, d = a // g1, d // g1
        if not g2.is_one():
            c, b = c // g2, b // g2
        return RatK._make(a * c, b * d)

    __rmul__ = __mul__

    def scale(self, c: FqElem) -> 'RatK':
        if c == 0:
            return RatK.zero(self.field)
        return RatK._make(self.num.scale(c), self.den)

    def inverse(self) -> 'RatK':
        if self.is_zero():
            raise ZeroDivisionError("Zero has no inverse in K")
        num, den = self.den, self.num
        if not den.is_monic():
            inv = den.field.inv(den.lc)
            num, den = num.scale(inv), den.scale(inv)
        return RatK._make(num, den)

    def __truediv__(self, other):
        if not isinstance(other, (RatK, PolyA, int)):
            return NotImplemented
        return self * RatK.coerce(self.field, other).inverse()

    def __rtruediv__(self, other):
        if not isinstance(other, (PolyA, int)):
            return NotImplemented
        return RatK.coerce(self.field, other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatK._make(self.num ** n, self.den ** n)

    def frobenius_p(self) -> 'RatK':
        return RatK._make(self.num.frobenius_p(), self.den.frobenius_p())

    def to_text(self) -> str:
        """Canonical "num/den" text, den omitted when it is 1"""
        num = self.num.to_text()
        if self.den.coeffs == (1,):
            return num
        if '+' in num:
            num = f"({num})"
        den = self.den.to_text()
        if '+' in den or '*' in den:
            den = f"({den})"
        return f"{num}/{den}"


def rat_vpi(x: RatK, pi: PrimePi) -> Union[int, float]:
    """pi-adic valuation of an element of K, +inf for zero"""
    if x.is_zero():
        return INFINITY
    return poly_ord_at(x.num, pi) - poly_ord_at(x.den, pi)
