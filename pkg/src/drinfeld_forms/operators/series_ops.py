""" drinfeld_forms/operators/series_ops.py

Operators acting directly on u-series: Theta, the Serre derivative, V_pi,
U_pi and the rescaling slash f -> pi^{k/2} f(pi z).
"""

from typing import Optional

from ..algebra import PrimePi, RatK, USeries, series_compose
from ..carlitz import inverse_root_power_sums, t_series
from ..core.errors import OddWeightUnsupported
from ..core.logging import logger
from ..forms import FormLibrary, SeriesForm


def theta(f: USeries) -> USeries:
    """-u^2 d/du, so a_n u^n goes to -n a_n u^{n+1}; precision grows by one"""
    field = f.field
    out = [RatK.zero(field)] * (f.prec + 1)
    for n, c in enumerate(f.coeffs):
        if n and c.num.coeffs:
            out[n + 1] = c * (-n)
    return USeries._make(field, out)  # pylint: disable=protected-access


def partial_series(f: USeries, k: int, e: USeries) -> USeries:
    """Theta f + k E f, known to the smaller of the two precisions"""
    prec = min(f.prec, e.prec)
    f = f.truncate(prec)
    return theta(f).truncate(prec) + (e.truncate(prec) * f).truncate(prec) * k


def partial(form: SeriesForm, library: FormLibrary) -> SeriesForm:
    """The Serre derivative of a form: weight k + 2, type l + 1, same level"""
    e = library.e(form.prec).series
    name = f"d({form.name})" if form.name else ""
    return SeriesForm(partial_series(form.series, form.weight, e), form.weight + 2,
                      form.type + 1, form.level, name)


def v_operator(f: USeries, pi: PrimePi, prec: Optional[int] = None) -> USeries:
    """f(pi z) = f(t_pi).  Known to prec_f * q^d unless a smaller prec is asked for"""
    target = f.prec * pi.norm if prec is None else min(prec, f.prec * pi.norm)
    return series_compose(f, t_series(pi.pi, target), target)


def u_operator(f: USeries, pi: PrimePi) -> USeries:
    """(1/pi) sum_lambda f((z + lambda)/pi) = (1/pi) sum_{n>=1} a_n s_n.

    The n = 0 term is q^d a_0 / pi = 0.  Since ord s_n >= ceil(n/q^d) the
    result is known to ceil(prec_f / q^d)."""
    field = f.field
    out_prec = -(-f.prec // pi.norm)
    sums = inverse_root_power_sums(pi, f.prec, out_prec)
    zero = RatK.zero(field)
    acc = [zero] * out_prec
    for n in range(1, f.prec):
        a = f.coeffs[n]
        if not a.num.coeffs:
            continue
        row = sums.sums[n].coeffs
        for e in range(-(-n // pi.norm), min(n, out_prec - 1) + 1):
            c = row[e].num
            if c.coeffs:
                acc[e] = acc[e] + a * c
    inv_pi = RatK.one(field) / pi.pi
    logger.debug(f"Applied U at {pi.to_text()}: O(u^{f.prec}) -> O(u^{out_prec})")
    return USeries._make(field, [c * inv_pi if c.num.coeffs else c for c in acc])  # pylint: disable=protected-access


def pi_power(pi: PrimePi, exponent: int) -> RatK:
    return RatK.coerce(pi.field, pi.pi) ** exponent


def half_weight(weight: int) -> int:
    if weight % 2:
        raise OddWeightUnsupported(f"pi^(k/2) is undefined for odd weight {weight}")
    return weight // 2


def iota_slash(f: USeries, pi: PrimePi, weight: int, prec: Optional[int] = None) -> USeries:
    """f restricted by diag(pi, 1): pi^{k/2} f(pi z)"""
    return v_operator(f, pi, prec).scale(pi_power(pi, half_weight(weight)))

