""" drinfeld_forms/carlitz/powersums.py

Power sums s_n = sum_lambda u((z + lambda)/pi)^n over lambda in A/pi.

The values u((z + lambda)/pi) are the reciprocals of the roots x of
P(x) = rho_pi(x) - 1/u.  Since P'(x) = pi, the logarithmic derivative gives
sum_n s_n t^{n-1} = -P'(t)/P(t) = pi u sum_j u^j rho_pi(t)^j, so

    s_n = pi * sum_j u^{j+1} [t^{n-1}] rho_pi(t)^j

with no division by n anywhere.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple

from ..algebra import PolyA, PrimePi, RatK, USeries
from ..core.logging import logger
from .carlitz import carlitz_coeffs


@dataclass(frozen=True)
class PowerSums:
    """s_1..s_{count-1} for one prime, each known modulo O(u^prec)."""

    pi: PrimePi
    sums: Tuple[USeries, ...]
    prec: int

    @property
    def max_index(self) -> int:
        return len(self.sums) - 1

    def __getitem__(self, n: int) -> USeries:
        if n < 1 or n > self.max_index:
            raise IndexError(f"Power sum s_{n} was not computed")
        return self.sums[n]


@lru_cache(maxsize=64)
def inverse_root_power_sums(pi: PrimePi, count: int, prec: Optional[int] = None) -> PowerSums:
    """s_n for 1 <= n < count, each to u-precision prec (defaults to count)"""
    if count < 1:
        raise ValueError("Need count >= 1")
    field = pi.field
    prec = count if prec is None else prec
    zero, one = PolyA.zero(field), PolyA.one(field)
    q = field.q
    rho = [(q ** i, c) for i, c in enumerate(carlitz_coeffs(pi.pi).coeffs) if c]

    # values[n][e] is the u^e coefficient of s_n
    values: List[List[PolyA]] = [[zero] * prec for _ in range(count)]
    width = count - 1  # t-degrees 0..count-2 are needed
    power = [one] + [zero] * (width - 1) if width > 0 else []
    for j in range(max(prec - 1, 0)):
        if j >= width:
            break
        for m in range(j, width):
            c = power[m]
            if c:
                values[m + 1][j + 1] = pi.pi * c
        # rho_pi(t)^{j+1} has no terms below t^{j+1}
        following = [zero] * width
        for m in range(j + 1, width):
            acc = zero
            for step, c in rho:
                if m - step < j:
                    break
                prev = power[m - step]
                if prev:
                    acc = acc + c * prev
            following[m] = acc
        power = following
    logger.debug(f"Computed {count - 1} power sums for pi={pi.to_text()} to O(u^{prec})")
    sums = tuple(USeries._make(field, [RatK._make(c, one) for c in row])  # pylint: disable=protected-access
                 for row in values)
    return PowerSums(pi=pi, sums=sums, prec=prec)


def generating_identity_defect(sums: PowerSums) -> Optional[Tuple[int, int]]:
    """First (t-degree, u-exponent) where (sum s_n t^{n-1})(rho_pi(t) - 1/u) + pi
    fails to vanish, or None when it holds on the whole known range"""
    pi = sums.pi
    field = pi.field
    q = field.q
    rho = [(q ** i, c) for i, c in enumerate(carlitz_coeffs(pi.pi).coeffs) if c]
    count = sums.max_index + 1
    for m in range(count - 1):
        for e in range(sums.prec - 1):
            value = PolyA.zero(field)
            for step, c in rho:
                n = m - step + 1
                if n < 1:
                    break
                value = value + c * sums.sums[n].coeffs[e].num
            value = value - sums.sums[m + 1].coeffs[e + 1].num
            if m == 0 and e == 0:
                value = value + pi.pi
            if value:
                return (m, e)
    return None
