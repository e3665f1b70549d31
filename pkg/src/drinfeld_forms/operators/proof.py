""" drinfeld_forms/operators/proof.py

Mechanical replay of the filtration argument for a pair of W-eigenforms
f, g with Theta f = g (mod pi).  Every intermediate congruence is computed
rather than assumed, and the report says whether the argument ends in a
contradiction or dissolves because the filtration of F dropped.
"""

from typing import Optional

from ..algebra import series_vpi
from ..core.encoders import JSONSerializable, canonical_number
from ..core.errors import NotAnEigenform, PremiseViolated
from ..core.logging import logger
from ..forms import Level, SeriesForm
from ..structure import filtration, solve_prec
from .congruence import CongruenceReport, congruent
from .oldforms import OldformAlgebra, OldPoly, del_poly, e_star_poly, eigenvalue, w_action
from .series_ops import partial, partial_series, theta

CONTRADICTION = "contradiction"
FILTRATION_DROP = "filtration-drop"
CONSISTENT = "consistent"


class ProofTraceReport(JSONSerializable):
    """Every verdict produced while replaying the argument for one pair (f, g)"""

    def __init__(self, f: OldPoly, g: OldPoly, algebra: OldformAlgebra, prec: int):
        self.f = f.to_text()
        self.g = g.to_text()
        self.pi = algebra.pi.to_text()
        self.prec = prec
        self.weight = int(f.weight or 0)
        self.alpha: Optional[int] = None
        self.beta: Optional[int] = None
        self.k_divisible_by_p = self.weight % algebra.field.p == 0
        self.premise: Optional[CongruenceReport] = None
        self.h_integral = False
        self.rewrite_holds = False
        self.f_congruence: Optional[CongruenceReport] = None
        self.f_filtration = None
        self.hypothesis_filtration = 0
        self.hypothesis_holds = False
        self.h_star_congruence: Optional[CongruenceReport] = None
        self.h_gd_congruence: Optional[CongruenceReport] = None
        self.h_filtration = None
        self.h_bound = 0
        self.h_bound_holds = False
        self.gd_f_filtration = None
        self.outcome = CONSISTENT

    @property
    def chain_holds(self) -> bool:
        """All intermediate congruences hold"""
        checks = [self.premise, self.f_congruence, self.h_star_congruence, self.h_gd_congruence]
        return all(bool(c) for c in checks) and self.h_integral and self.rewrite_holds \
            and self.h_bound_holds


def _needed_prec(algebra: OldformAlgebra, k: int, type_: int) -> int:
    q = algebra.field.q
    norm = algebra.pi.norm
    weight_f = k + (k - 1) * (norm - 1)
    return max(solve_prec(q, weight_f, type_),
               solve_prec(q, weight_f + 2, type_ + 1),
               solve_prec(q, weight_f + norm + 1, type_ + 1))


def proof_trace(f: OldPoly, g: OldPoly, algebra: OldformAlgebra,
                prec: Optional[int] = None) -> ProofTraceReport:
    """Replays g - DEL f + k E* f = pi h, the traces F = Tr(k f g_(k)) and
    H = Tr((g - DEL f) g_(k)), and the filtration bookkeeping around them"""
    alpha, beta = eigenvalue(f), eigenvalue(g)
    if alpha is None:
        raise NotAnEigenform(f"f = {f.to_text()} is not a W-eigenvector")
    if beta is None:
        raise NotAnEigenform(f"g = {g.to_text()} is not a W-eigenvector")
    k = int(f.weight or 0)
    if g.weight != k + 2:
        raise PremiseViolated(f"g must have weight {k + 2}, got {g.weight}")
    pi = algebra.pi
    library = algebra.library
    norm = pi.norm
    type_f = int(f.type or 0)
    prec = prec or _needed_prec(algebra, k, type_f)
    report = ProofTraceReport(f, g, algebra, prec)
    report.alpha, report.beta = alpha, beta

    flat_f = algebra.flatten(f, prec)
    flat_g = algebra.flatten(g, prec)
    report.premise = congruent(theta(flat_f), flat_g, pi, 1, "Theta(f)", "g")
    if not report.premise:
        raise PremiseViolated(
            f"Theta(f) and g differ modulo {pi.to_text()} at u^{report.premise.witness}")

    e_series = library.e(prec).series
    e_star = algebra.flatten(e_star_poly(pi), prec)
    star_f = (e_star * flat_f).truncate(prec)
    defect = flat_g - partial_series(flat_f, k, e_series) + star_f * k
    report.h_integral = series_vpi(defect, pi) >= 1

    delta_f = del_poly(f)
    lhs = w_action(g - delta_f + e_star_poly(pi) * f * k) * alpha
    rhs = g * (alpha * beta) - delta_f
    report.rewrite_holds = lhs == rhs

    gk = algebra.gk_form(k)
    big_f = algebra.trace_form(f * gk * k, prec, "F")
    report.f_congruence = congruent(big_f.series, flat_f * k, pi, 1, "F", "k*f")
    report.f_filtration = canonical_number(filtration(big_f, pi, library))
    report.hypothesis_filtration = (k - 1) * (norm - 1) + k
    report.hypothesis_holds = report.f_filtration == report.hypothesis_filtration

    big_h = algebra.trace_form((g - delta_f) * gk, prec, "H")
    report.h_star_congruence = congruent(big_h.series, star_f * (-k), pi, 1, "H", "-k*Estar*f")
    gd_prime = partial(library.gd(pi, prec), library)
    gd_f = SeriesForm((gd_prime.series * big_f.series).truncate(prec),
                      gd_prime.weight + big_f.weight, gd_prime.type + big_f.type,
                      Level.one(), "d(gd)*F")
    report.h_gd_congruence = congruent(big_h.series, gd_f.series, pi, 1, "H", "d(gd)*F")
    h_filtration = filtration(big_h, pi, library)
    report.h_filtration = canonical_number(h_filtration)
    report.h_bound = (k - 1) * norm + 3
    report.h_bound_holds = h_filtration <= report.h_bound
    report.gd_f_filtration = canonical_number(filtration(gd_f, pi, library))

    if report.hypothesis_holds and alpha == beta:
        report.outcome = CONTRADICTION
    elif not report.hypothesis_holds:
        report.outcome = FILTRATION_DROP
    logger.info(f"Proof trace at {pi.to_text()} for weight {k}: {report.outcome}")
    return report
