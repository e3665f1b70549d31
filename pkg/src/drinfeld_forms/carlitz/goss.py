""" drinfeld_forms/carlitz/goss.py

Goss polynomials of the Carlitz lattice: G_k(t) expresses the lattice sum
sum_lambda (z - lambda)^{-k} in the parameter t = 1/e_C(z).
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

from ..algebra import FiniteField, RatK
from .carlitz import bracket_D_L


@dataclass(frozen=True)
class GossPoly:
    """G_k with coeffs[j] the coefficient of t^j (coeffs[0] is always zero)."""

    k: int
    coeffs: Tuple[RatK, ...]

    def coefficient(self, j: int) -> RatK:
        return self.coeffs[j]

    def support(self) -> List[int]:
        return [j for j, c in enumerate(self.coeffs) if c]


@lru_cache(maxsize=None)
def _goss_table(field: FiniteField, k: int) -> Tuple[Tuple[RatK, ...], ...]:
    """All of G_0..G_k as coefficient tuples of length k + 1"""
    zero = RatK.zero(field)
    q = field.q
    inverses = []
    i = 1
    while q ** i <= k:
        _, d_i, _ = bracket_D_L(field, i)
        inverses.append((q ** i, RatK.coerce(field, d_i).inverse()))
        i += 1
    table: List[List[RatK]] = [[zero] * (k + 1)]
    if k >= 1:
        first = [zero] * (k + 1)
        first[1] = RatK.one(field)
        table.append(first)
    for m in range(2, k + 1):
        # G_m = t (G_{m-1} + sum_i G_{m-q^i} / D_i)
        inner = list(table[m - 1])
        for step, inv_d in inverses:
            if step > m:
                break
            lower = table[m - step]
            for j, c in enumerate(lower):
                if c:
                    inner[j] = inner[j] + c * inv_d
        shifted = [zero] + inner[:k]
        table.append(shifted)
    return tuple(tuple(row) for row in table)


def goss_poly(field: FiniteField, k: int) -> GossPoly:
    if k < 0:
        raise ValueError("Goss polynomials are indexed by k >= 0")
    return GossPoly(k=k, coeffs=_goss_table(field, k)[k])
