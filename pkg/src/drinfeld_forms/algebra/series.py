""" drinfeld_forms/algebra/series.py

Truncated power series in the uniformizer u with coefficients in K.  A series
of precision N stores exactly N coefficients and stands for its value modulo
O(u^N).  Every operation states how it propagates precision.
"""

from math import isqrt
from typing import Iterable, List, Optional, Sequence, Union

from ..core.errors import (CompositionNotSupported, InsufficientPrecision,
                           NonUnitSeries, RootObstruction)
from .field import FiniteField
from .poly import INFINITY, PolyA, PrimePi, RatK, rat_vpi

Scalar = Union[RatK, PolyA, int]


def _is_integral(coeffs: Sequence[RatK]) -> bool:
    return all(c.den.coeffs == (1,) for c in coeffs)


def _mul_trunc(field: FiniteField, a: Sequence[RatK], b: Sequence[RatK], n: int) -> List[RatK]:
    """Product of two coefficient lists truncated to length n"""
    zero = RatK.zero(field)
    if n <= 0:
        return []
    if _is_integral(a[:n]) and _is_integral(b[:n]):
        # Work on numerators directly when no denominators are present
        one = PolyA.one(field)
        acc = [PolyA.zero(field)] * n
        nzb = [(j, c.num) for j, c in enumerate(b[:n]) if c.num.coeffs]
        for i, x in enumerate(a[:n]):
            if not x.num.coeffs:
                continue
            lim = n - i
            xn = x.num
            for j, y in nzb:
                if j >= lim:
                    break
                acc[i + j] = acc[i + j] + xn * y
        return [RatK._make(c, one) for c in acc]
    out = [zero] * n
    nzb_rat = [(j, c) for j, c in enumerate(b[:n]) if c.num.coeffs]
    for i, x in enumerate(a[:n]):
        if not x.num.coeffs:
            continue
        lim = n - i
        for j, y in nzb_rat:
            if j >= lim:
                break
            out[i + j] = out[i + j] + x * y
    return out


def _inv_trunc(field: FiniteField, a: Sequence[RatK], n: int) -> List[RatK]:
    zero = RatK.zero(field)
    if not a or a[0].is_zero():
        raise NonUnitSeries("Series with zero constant term has no inverse")
    inv0 = a[0].inverse()
    neg_inv0 = -inv0
    nonzero = [(i, c) for i, c in enumerate(a[1:n], start=1) if c.num.coeffs]
    out = [inv0]
    for m in range(1, n):
        acc = zero
        for i, c in nonzero:
            if i > m:
                break
            prev = out[m - i]
            if prev.num.coeffs:
                acc = acc + c * prev
        out.append(acc * neg_inv0 if acc.num.coeffs else zero)
    return out


def _pow_trunc(field: FiniteField, a: Sequence[RatK], e: int, n: int) -> List[RatK]:
    result = [RatK.one(field)] + [RatK.zero(field)] * (n - 1)
    base = list(a[:n])
    while e:
        if e & 1:
            result = _mul_trunc(field, result, base, n)
        e >>= 1
        if e:
            base = _mul_trunc(field, base, base, n)
    return result


class USeries:
    """A power series in u known modulo O(u^prec)."""

    __slots__ = ('field', 'coeffs')

    def __init__(self, field: FiniteField, coeffs: Iterable[Scalar] = (),
                 prec: Optional[int] = None):
        values = [RatK.coerce(field, c) for c in coeffs]
        if prec is not None:
            if len(values) > prec:
                values = values[:prec]
            else:
                values.extend([RatK.zero(field)] * (prec - len(values)))
        self.field = field
        self.coeffs = tuple(values)

    @classmethod
    def _make(cls, field: FiniteField, coeffs) -> 'USeries':
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def zero(cls, field: FiniteField, prec: int) -> 'USeries':
        return cls._make(field, (RatK.zero(field),) * prec)

    @classmethod
    def constant(cls, field: FiniteField, value: Scalar, prec: int) -> 'USeries':
        return cls(field, [value], prec)

    @classmethod
    def monomial(cls, field: FiniteField, exponent: int, prec: int,
                 coeff: Scalar = 1) -> 'USeries':
        """coeff * u^exponent modulo O(u^prec)"""
        coeffs = [RatK.zero(field)] * prec
        if exponent < prec:
            coeffs[exponent] = RatK.coerce(field, coeff)
        return cls._make(field, coeffs)

    @property
    def prec(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, index: int) -> RatK:
        if index >= len(self.coeffs):
            raise InsufficientPrecision(
                f"Coefficient u^{index} is beyond the precision {len(self.coeffs)}")
        return self.coeffs[index]

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        shown = [f"({c.to_text()})*u^{i}" for i, c in enumerate(self.coeffs[:6]) if c]
        return f"USeries({' + '.join(shown) or '0'} + O(u^{self.prec}))"

    def __eq__(self, other):
        if not isinstance(other, USeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def order(self) -> Optional[int]:
        """Index of the first nonzero known coefficient, None when all vanish"""
        for i, c in enumerate(self.coeffs):
            if c.num.coeffs:
                return i
        return None

    def _ord(self) -> int:
        found = self.order()
        return 0 if found is None else found

    def is_zero(self) -> bool:
        return self.order() is None

    def is_integral(self) -> bool:
        """True when every known coefficient lies in A"""
        return _is_integral(self.coeffs)

    def _check(self, other: 'USeries'):
        if other.field.spec != self.field.spec:
            raise ValueError("Series over different fields cannot be combined")

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, USeries):
            self._check(other)
            n = min(self.prec, other.prec)
            return USeries._make(self.field, [a + b for a, b in
                                              zip(self.coeffs[:n], other.coeffs[:n])])
        if isinstance(other, (RatK, PolyA, int)):
            if not self.coeffs:
                return self
            return USeries._make(self.field, (self.coeffs[0] + other,) + self.coeffs[1:])
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return USeries._make(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (USeries, RatK, PolyA, int)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, USeries):
            return series_mul(self, other)
        if isinstance(other, (RatK, PolyA, int)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (RatK, PolyA, int)):
            return self.scale(RatK.one(self.field) / other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            return series_inv(self) ** (-n)
        result = USeries.constant(self.field, 1, self.prec)
        base = self
        while n:
            if n & 1:
                result = series_mul(result, base)
            n >>= 1
            if n:
                base = series_mul(base, base)
        return result

    def scale(self, c: Scalar) -> 'USeries':
        c = RatK.coerce(self.field, c)
        if c.is_zero():
            return USeries.zero(self.field, self.prec)
        return USeries._make(self.field, [x * c if x.num.coeffs else x for x in self.coeffs])

    def truncate(self, prec: int) -> 'USeries':
        if prec > self.prec:
            raise InsufficientPrecision(f"Cannot raise precision {self.prec} to {prec}")
        return USeries._make(self.field, self.coeffs[:prec])

    def shift(self, k: int) -> 'USeries':
        """u^k * f, precision grows by k"""
        return USeries._make(self.field, (RatK.zero(self.field),) * k + self.coeffs)

    def shift_down(self, k: int) -> 'USeries':
        """f / u^k for a series whose first k coefficients vanish"""
        if any(c for c in self.coeffs[:k]):
            raise NonUnitSeries(f"Series is not divisible by u^{k}")
        return USeries._make(self.field, self.coeffs[k:])

    def frobenius_q(self, prec: Optional[int] = None) -> 'USeries':
        """f^q computed by the q-power map: a(T)u^n becomes a(T^q)u^{nq}.

        Exact to precision q * prec(f), optionally cut at prec."""
        q = self.field.q
        target = self.prec * q if prec is None else min(prec, self.prec * q)
        coeffs = [RatK.zero(self.field)] * target
        for n, c in enumerate(self.coeffs):
            if n * q >= target:
                break
            if c.num.coeffs:
                coeffs[n * q] = RatK._make(c.num.frobenius_q(), c.den.frobenius_q())
        return USeries._make(self.field, coeffs)

    def frobenius_p(self) -> 'USeries':
        """f^p coefficientwise through the Frobenius of K, u-exponents times p"""
        p = self.field.p
        coeffs = [RatK.zero(self.field)] * (self.prec * p)
        for n, c in enumerate(self.coeffs):
            if c.num.coeffs:
                coeffs[n * p] = c.frobenius_p()
        return USeries._make(self.field, coeffs)

    def agrees_with(self, other: 'USeries') -> bool:
        """Equality of the known coefficients up to the common precision"""
        n = min(self.prec, other.prec)
        return self.coeffs[:n] == other.coeffs[:n]

    def to_texts(self) -> List[str]:
        return [c.to_text() for c in self.coeffs]


def series_mul(f: USeries, g: USeries) -> USeries:
    """Product; precision min(prec_f + ord_g, prec_g + ord_f)"""
    f._check(g)  # pylint: disable=protected-access
    prec = min(f.prec + g._ord(), g.prec + f._ord())  # pylint: disable=protected-access
    return USeries._make(f.field, _mul_trunc(f.field, f.coeffs, g.coeffs, prec))


def series_inv(f: USeries) -> USeries:
    """Multiplicative inverse of a unit series, same precision"""
    return USeries._make(f.field, _inv_trunc(f.field, f.coeffs, f.prec))


def series_compose(f: USeries, s: USeries, prec: Optional[int] = None) -> USeries:
    """f(s(u)) for s(0) = 0.

    With m = ord(s) the result is known to min(prec_f * m, prec_s), further
    capped by prec when given.  Callers pass s to precision prec_f * m to get
    the full prec_f * m.  Evaluation splits f into blocks of b coefficients
    (baby steps s^0..s^{b-1}) and runs Horner in s^b over the blocks."""
    f._check(s)  # pylint: disable=protected-access
    if s.prec and s.coeffs[0].num.coeffs:
        raise CompositionNotSupported("Inner series must have zero constant term")
    m = s.order()
    if m is None:
        m = max(s.prec, 1)
    target = min(f.prec * m, max(s.prec, m))
    if prec is not None:
        target = min(target, prec)
    field = f.field
    if target <= 0:
        return USeries.zero(field, 0)
    zero = RatK.zero(field)
    inner = list(s.coeffs[:target]) + [zero] * max(0, target - s.prec)
    # only f_n with n * m < target can reach the known range
    count = min(f.prec, -(-target // m))
    step = max(1, isqrt(count))
    baby: List[List[RatK]] = [[RatK.one(field)] + [zero] * (target - 1), inner]
    while len(baby) <= step:
        baby.append(_mul_trunc(field, baby[-1], inner, target))
    giant = baby[step]

    def block(start: int) -> List[RatK]:
        out = [zero] * target
        for i in range(step):
            n = start + i
            if n >= count:
                break
            a = f.coeffs[n]
            if not a.num.coeffs:
                continue
            for e in range(i * m, target):
                c = baby[i][e]
                if c.num.coeffs:
                    out[e] = out[e] + a * c
        return out

    starts = list(range(0, count, step))
    acc = block(starts[-1])
    for start in reversed(starts[:-1]):
        acc = _mul_trunc(field, acc, giant, target)
        acc = [x + y for x, y in zip(acc, block(start))]
    return USeries._make(field, acc)


def series_root(f: USeries, n: int) -> USeries:
    """The n-th root g with g(0) = 1 of a series with f(0) = 1, by Newton iteration.

    Each pass doubles the number of correct coefficients; no division by an
    index occurs, only by n which is a unit of F_p."""
    field = f.field
    if n < 1 or n % field.p == 0:
        raise RootObstruction(f"Cannot extract a {n}-th root in characteristic {field.p}")
    if not f.prec:
        return f
    one = RatK.one(field)
    if f.coeffs[0] != one:
        raise RootObstruction("Root extraction needs constant term 1")
    inv_n = RatK.from_int(field, n).inverse()
    target = f.prec
    root = [one]
    known = 1
    while known < target:
        known = min(2 * known, target)
        root = root + [RatK.zero(field)] * (known - len(root))
        partial = _pow_trunc(field, root, n - 1, known)
        full = _mul_trunc(field, partial, root, known)
        defect = [x - y for x, y in zip(full, f.coeffs[:known])]
        step = _mul_trunc(field, defect, _inv_trunc(field, partial, known), known)
        root = [x - c * inv_n if c.num.coeffs else x for x, c in zip(root, step)]
    return USeries._make(field, root)


def series_vpi(f: USeries, pi: PrimePi) -> Union[int, float]:
    """Minimum pi-adic valuation over the known coefficients, +inf if they all vanish"""
    best: Union[int, float] = INFINITY
    for c in f.coeffs:
        if c.num.coeffs:
            best = min(best, rat_vpi(c, pi))
    return best
