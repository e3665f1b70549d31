""" drinfeld_forms/structure/filtration.py

The weight filtration of a level one form modulo pi.
"""

from typing import Dict, Tuple, Union

from ..algebra import INFINITY, PrimePi, ResSeries, residue_field, series_reduce_mod_pi
from ..core.logging import logger
from ..forms import FormLibrary, SeriesForm
from ..operators.series_ops import partial
from .isobaric import (MIN_MARGIN, IsobarPoly, enumerate_monomials, isobaric_divide_power,
                       isobaric_solve, reduce_isobaric)


def solve_prec(q: int, k: int, l: int) -> int:  # noqa: E741
    """Smallest precision isobaric_solve accepts for weight k and type l"""
    monos = enumerate_monomials(q, k, l)
    return (monos[-1][1] if monos else 0) + max(MIN_MARGIN, len(monos))


def ad_bd(pi: PrimePi, library: FormLibrary) -> Tuple[IsobarPoly, IsobarPoly]:
    """The isobaric polynomials of g_d and of its derivative d_{q^d-1} g_d"""
    q = pi.field.q
    k = pi.norm - 1
    prec = max(solve_prec(q, k, 0), solve_prec(q, k + 2, 1))
    gd = library.gd(pi, prec)
    a_d = isobaric_solve(gd, library)
    b_d = isobaric_solve(partial(gd, library), library)
    return a_d, b_d


def filtration(form: SeriesForm, pi: PrimePi, library: FormLibrary) -> Union[int, float]:
    """w(f mod pi): -inf for the zero class, else k - e(q^d - 1) with e the
    largest power of A_d mod pi dividing phi mod pi"""
    if series_reduce_mod_pi(form.series, pi).is_zero():
        return -INFINITY
    phi = reduce_isobaric(isobaric_solve(form, library), pi)
    if phi.is_zero():
        return -INFINITY
    a_d, _ = ad_bd(pi, library)
    e, _ = isobaric_divide_power(phi, reduce_isobaric(a_d, pi))
    w = form.weight - int(e) * (pi.norm - 1)
    logger.debug(f"Filtration of {form.name or 'form'} of weight {form.weight} "
                 f"at {pi.to_text()} is {w}")
    return w


def filtration_by_search(form: SeriesForm, pi: PrimePi,
                         library: FormLibrary) -> Union[int, float]:
    """The least weight k0 <= k holding a form congruent to f modulo pi,
    found by trying every weight and type in turn"""
    reduced = series_reduce_mod_pi(form.series, pi)
    if reduced.is_zero():
        return -INFINITY
    q = pi.field.q
    prec = form.prec
    residues = residue_field(pi)
    g1 = series_reduce_mod_pi(library.g1(prec).series, pi)
    h = series_reduce_mod_pi(library.h(prec).series, pi)
    powers: Dict[Tuple[str, int], ResSeries] = {}

    def power(name: str, base: ResSeries, e: int) -> ResSeries:
        if e == 0:
            return ResSeries.constant(residues, residues.one, prec)
        key = (name, e)
        if key not in powers:
            powers[key] = power(name, base, e - 1) * base
        return powers[key]

    for k0 in range(form.weight + 1):
        for l0 in range(q - 1):
            monos = enumerate_monomials(q, k0, l0)
            if not monos or monos[-1][1] >= prec:
                continue
            residual = reduced
            for i, j in monos:
                c = residual[j] if j % 2 == 0 else -residual[j]
                if c.coeffs:
                    mono = power('g1', g1, i) * power('h', h, j)
                    residual = residual - mono.scale(c)
            if residual.is_zero():
                return k0
    return form.weight
