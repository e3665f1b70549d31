""" drinfeld_forms/carlitz/carlitz.py

The Carlitz module rho with rho_T = T X + X^q, the bracket quantities
[i], D_i, L_i, the parameters t_a = u(az) and the expansion of 1/e_C.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from ..algebra import FiniteField, PolyA, RatK, USeries, series_inv
from ..core.errors import NotEvenWeight
from ..core.logging import logger


def _strip(coeffs) -> Tuple[PolyA, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class AdditivePoly:
    """Sum of c_i X^{q^i} with c_i in A."""

    coeffs: Tuple[PolyA, ...]

    @property
    def height(self) -> int:
        """Index of the top q-power, -1 for the zero polynomial"""
        return len(self.coeffs) - 1

    def __add__(self, other: 'AdditivePoly') -> 'AdditivePoly':
        longer, shorter = (self.coeffs, other.coeffs) if len(self.coeffs) >= len(other.coeffs) \
            else (other.coeffs, self.coeffs)
        out = list(longer)
        for i, c in enumerate(shorter):
            out[i] = out[i] + c
        return AdditivePoly(_strip(out))

    def scale(self, a: PolyA) -> 'AdditivePoly':
        return AdditivePoly(_strip(c * a for c in self.coeffs))

    def compose(self, other: 'AdditivePoly') -> 'AdditivePoly':
        """(self o other)(X) = sum_i c_i (sum_j d_j X^{q^j})^{q^i}"""
        if not self.coeffs or not other.coeffs:
            return AdditivePoly(())
        field = self.coeffs[0].field
        out = [PolyA.zero(field)] * (len(self.coeffs) + len(other.coeffs) - 1)
        twisted = list(other.coeffs)
        for i, c in enumerate(self.coeffs):
            if i:
                twisted = [d.frobenius_q() for d in twisted]
            if c.is_zero():
                continue
            for j, d in enumerate(twisted):
                out[i + j] = out[i + j] + c * d
        return AdditivePoly(_strip(out))

    def to_texts(self):
        return [c.to_text() for c in self.coeffs]


@lru_cache(maxsize=None)
def bracket_D_L(field: FiniteField, i: int) -> Tuple[PolyA, PolyA, PolyA]:  # pylint: disable=invalid-name
    """([i], D_i, L_i) with [i] = T^{q^i} - T, D_i = [i] D_{i-1}^q, L_i = [i] L_{i-1}"""
    if i < 1:
        raise ValueError("Bracket index must be at least 1")
    bracket = PolyA.T(field, field.q ** i) - PolyA.T(field)
    if i == 1:
        return bracket, bracket, bracket
    _, prev_d, prev_l = bracket_D_L(field, i - 1)
    return bracket, bracket * prev_d.frobenius_q(), bracket * prev_l


@lru_cache(maxsize=None)
def _carlitz_power(field: FiniteField, j: int) -> AdditivePoly:
    """rho_{T^j}, using rho_{T^{j+1}} = rho_T o rho_{T^j}"""
    if j == 0:
        return AdditivePoly((PolyA.one(field),))
    prev = _carlitz_power(field, j - 1).coeffs
    t = PolyA.T(field)
    out = [t * prev[0]]
    for i in range(1, len(prev)):
        out.append(t * prev[i] + prev[i - 1].frobenius_q())
    out.append(prev[-1].frobenius_q())
    return AdditivePoly(_strip(out))


def carlitz_coeffs(a: PolyA) -> AdditivePoly:
    """Coefficients of rho_a, by F_q-linearity in a"""
    field = a.field
    total = AdditivePoly(())
    for j, c in enumerate(a.coeffs):
        if c:
            power = _carlitz_power(field, j)
            total = total + AdditivePoly(_strip(d.scale(c) for d in power.coeffs))
    return total


@lru_cache(maxsize=4096)
def t_series(a: PolyA, prec: int) -> USeries:
    """t_a = u(az) as a series in u, from 1/t_a = rho_a(1/u).

    For monic a of degree n, u^{q^n} / t_a = sum_i c_i u^{q^n - q^i} has constant
    term 1, so t_a is u^{q^n} times the inverse of that sparse polynomial."""
    if not a.is_monic():
        raise ValueError(f"t_a needs a monic a, got {a.to_text()}")
    field = a.field
    n = len(a.coeffs) - 1
    lead = field.q ** n
    one = PolyA.one(field)
    coeffs = [PolyA.zero(field)] * prec
    if lead < prec:
        rho = carlitz_coeffs(a).coeffs
        gaps = [(lead - field.q ** i, c) for i, c in enumerate(rho[:n]) if c]
        gaps.sort(key=lambda item: item[0])
        inverse = [one]
        for m in range(1, prec - lead):
            acc = PolyA.zero(field)
            for gap, c in gaps:
                if gap > m:
                    break
                prev = inverse[m - gap]
                if prev:
                    acc = acc + c * prev
            inverse.append(-acc)
        coeffs[lead:] = inverse
    return USeries._make(field, [RatK._make(c, one) for c in coeffs])  # pylint: disable=protected-access


@lru_cache(maxsize=None)
def inv_exp_coeffs(field: FiniteField, count: int) -> Tuple[RatK, ...]:
    """c_0..c_{count-1} of 1/e_C(z) - 1/z where e_C(z) = sum z^{q^i}/D_i.

    e_C(z) = z S(z) with S = 1 + sum_{i>=1} z^{q^i-1}/D_i, so c_j is the
    coefficient of z^{j+1} in 1/S."""
    if count < 1:
        raise ValueError("Need at least one coefficient")
    q = field.q
    length = count + 1
    values = [RatK.zero(field)] * length
    values[0] = RatK.one(field)
    i = 1
    while q ** i - 1 < length:
        _, d_i, _ = bracket_D_L(field, i)
        values[q ** i - 1] = RatK.coerce(field, d_i).inverse()
        i += 1
    inverse = series_inv(USeries(field, values))
    logger.debug(f"Inverted the Carlitz exponential to {count} terms over F_{q}")
    return tuple(inverse.coeffs[1:])


def zeta_ratio(field: FiniteField, k: int) -> RatK:
    """zeta_A(k) / pi~^k for (q-1) | k, read off as c_{k-1}.

    Comparing z^{k-1} coefficients in sum_{b != 0} 1/(z+b) = pi~/e_C(pi~ z) - 1/z
    gives (-1)^k zeta_A(k) = pi~^k c_{k-1}, and k is even."""
    if k < 1 or k % (field.q - 1):
        raise NotEvenWeight(f"Zeta ratio needs (q-1) | k, got k={k} for q={field.q}")
    return inv_exp_coeffs(field, k)[k - 1]
