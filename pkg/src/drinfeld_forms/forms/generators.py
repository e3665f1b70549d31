""" drinfeld_forms/forms/generators.py

u-expansions of the named forms.  Everything is normalized by the Carlitz
period so that coefficients live in K: E~_k stands for pi~^{-k} E_k.
"""

from functools import lru_cache
from typing import Dict, List, Optional

from ..algebra import (FiniteField, PolyA, PrimePi, RatK, USeries, monic_polys_upto,
                       series_compose, series_root)
from ..carlitz import bracket_D_L, goss_poly, t_series, zeta_ratio
from ..core.errors import NotEvenWeight
from ..core.logging import logger
from .base import Level, SeriesForm


def monic_cutoff(q: int, prec: int) -> int:
    """Largest degree n with q^n < prec; monic a of higher degree have
    ord t_a = q^{deg a} >= prec and cannot be seen.  -1 when prec <= 1."""
    n = -1
    while q ** (n + 1) < prec:
        n += 1
    return n


@lru_cache(maxsize=32)
def eisenstein_tilde(field: FiniteField, k: int, prec: int) -> USeries:
    """E~_k = -zeta(k)/pi~^k - sum_{a monic} G_k(t_a).

    The unit sum over a = c * b (c in F_q^*) collapses since G_k(c^{-1} t)
    summed over c keeps the powers t^j with (q-1) | j and multiplies them by
    -1; for (q-1) | k that is every power present in G_k."""
    q = field.q
    if k < 1 or k % (q - 1):
        raise NotEvenWeight(f"E~_k needs (q-1) | k, got k={k} for q={q}")
    goss = goss_poly(field, k)
    support = goss.support()
    zero = PolyA.zero(field)
    sums: Dict[int, List[PolyA]] = {j: [zero] * prec for j in support}
    cutoff = monic_cutoff(q, prec)
    for a in monic_polys_upto(field, cutoff):
        lead = q ** (len(a.coeffs) - 1)
        needed = [j for j in support if j * lead < prec]
        if not needed:
            continue
        ta = t_series(a, prec)
        power = ta
        for j in range(1, needed[-1] + 1):
            if j > 1:
                power = (power * ta).truncate(prec)
            if j in sums:
                row = sums[j]
                for e in range(j * lead, prec):
                    c = power.coeffs[e].num
                    if c.coeffs:
                        row[e] = row[e] + c
    total = [RatK.zero(field)] * prec
    if prec:
        total[0] = -zeta_ratio(field, k)
    for j in support:
        g = goss.coefficient(j)
        for e, c in enumerate(sums[j]):
            if c.coeffs:
                total[e] = total[e] - g * c
    logger.debug(f"Built E~_{k} over F_{q} to O(u^{prec}) from monic a of degree <= {cutoff}")
    return USeries._make(field, total)  # pylint: disable=protected-access


def gd_from_degree(field: FiniteField, d: int, prec: int) -> SeriesForm:
    """g_d = (-1)^{d+1} L_d E~_{q^d-1}, weight q^d - 1 and type 0"""
    _, _, l_d = bracket_D_L(field, d)
    sign = 1 if d % 2 else -1
    series = eisenstein_tilde(field, field.q ** d - 1, prec).scale(RatK.coerce(field, l_d * sign))
    return SeriesForm(series, field.q ** d - 1, 0, Level.one(), "g1" if d == 1 else f"g{d}")


def gd_series(pi: PrimePi, prec: int) -> SeriesForm:
    """The normalized Eisenstein series attached to the degree of pi"""
    return gd_from_degree(pi.field, pi.d, prec)


def g1_series(field: FiniteField, prec: int) -> SeriesForm:
    return gd_from_degree(field, 1, prec)


def delta_series(field: FiniteField, prec: int, g1: Optional[SeriesForm] = None) -> SeriesForm:
    """Delta = (g_1^{q+1} - g_2) / [1], with g_1^q read off by the q-power map.

    Both g_d start with 1, so the constant terms cancel."""
    q = field.q
    if g1 is None or g1.prec < prec:
        g1 = g1_series(field, prec)
    g1s = g1.series.truncate(prec)
    g2 = gd_from_degree(field, 2, prec).series
    bracket, _, _ = bracket_D_L(field, 1)
    series = ((g1s.frobenius_q(prec) * g1s).truncate(prec) - g2) / bracket
    if series.prec and series[0]:
        raise ValueError(f"Delta came out with constant term {series[0].to_text()}")
    return SeriesForm(series, q * q - 1, 0, Level.one(), "delta")


def h_series(field: FiniteField, prec: int, delta: Optional[SeriesForm] = None) -> SeriesForm:
    """h = -u * (-Delta / u^{q-1})^{1/(q-1)}, normalized to start with -u.

    Delta is needed to O(u^{prec+q-2}) for h to be known to O(u^prec)."""
    q = field.q
    need = prec + q - 2
    if delta is None or delta.prec < need:
        delta = delta_series(field, need)
    shifted = (-delta.series.truncate(need)).shift_down(q - 1)
    root = series_root(shifted, q - 1)
    series = (-root).shift(1).truncate(prec)
    return SeriesForm(series, q + 1, 1, Level.one(), "h")


@lru_cache(maxsize=16)
def e_series(field: FiniteField, prec: int) -> USeries:
    """E = sum_{a monic} a t_a, the false Eisenstein series of weight 2 and type 1"""
    zero = PolyA.zero(field)
    acc = [zero] * prec
    for a in monic_polys_upto(field, monic_cutoff(field.q, prec)):
        ta = t_series(a, prec)
        for e, c in enumerate(ta.coeffs):
            if c.num.coeffs:
                acc[e] = acc[e] + a * c.num
    one = PolyA.one(field)
    return USeries._make(field, [RatK._make(c, one) for c in acc])  # pylint: disable=protected-access


def e_star_series(pi: PrimePi, prec: int, e: Optional[USeries] = None) -> SeriesForm:
    """E* = E - pi E(pi z), where E(pi z) is E composed with t_pi"""
    field = pi.field
    if e is None or e.prec < prec:
        e = e_series(field, prec)
    e = e.truncate(prec)
    rescaled = series_compose(e, t_series(pi.pi, prec), prec)
    series = e - rescaled.scale(RatK.coerce(field, pi.pi))
    return SeriesForm(series, 2, 1, Level.at(pi), "Estar")
