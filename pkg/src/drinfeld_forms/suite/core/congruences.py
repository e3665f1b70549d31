""" drinfeld_forms/suite/core/congruences.py

Congruences between the Eisenstein series g_d, E and E* modulo pi.
"""

from ...algebra import USeries
from ...operators import congruent, identical, partial, u_operator, w_action
from ..base import BaseSuite, CheckResult


class Congruences(BaseSuite):
    """g_d = 1, E = -d(g_d) and E* = E modulo pi, plus the W and U action on E*"""

    shortname = 'congruences'
    description = 'Eisenstein congruences modulo pi'

    def check_gd_is_one(self) -> CheckResult:
        gd = self.library.gd(self.pi, self.prec)
        one = USeries.constant(self.field, 1, self.prec)
        return CheckResult.from_reports(congruent(gd.series, one, self.pi, 1, "gd", "1"))

    def check_e_is_minus_partial_gd(self) -> CheckResult:
        gd = self.library.gd(self.pi, self.prec)
        e = self.library.e(self.prec).series
        return CheckResult.from_reports(
            congruent(e, -partial(gd, self.library).series, self.pi, 1, "E", "-d(gd)"))

    def check_e_star_is_e(self) -> CheckResult:
        e_star = self.library.e_star(self.pi, self.prec).series
        e = self.library.e(self.prec).series
        return CheckResult.from_reports(congruent(e_star, e, self.pi, 1, "Estar", "E"))

    def check_w_negates_e_star(self) -> CheckResult:
        e_star = self.algebra.e_star()
        image = w_action(e_star)
        symbolic = image == -e_star
        prec = self.prec // self.norm
        flat = self.algebra.flatten(image, prec) == -self.algebra.flatten(e_star, prec)
        return CheckResult(symbolic and flat, f"W(Estar) = {image.to_text()}",
                           values={'symbolic': symbolic, 'flattened': flat, 'prec': prec})

    def check_u_fixes_e_star(self) -> CheckResult:
        e_star = self.library.e_star(self.pi, self.prec).series
        prec = self.prec // self.norm
        image = u_operator(e_star, self.pi).truncate(prec)
        return CheckResult.from_reports(
            identical(image, e_star.truncate(prec), self.pi, "U(Estar)", "Estar"),
            values={'prec': prec})

    def check_e_star_trace_vanishes(self) -> CheckResult:
        """Tr(E*) = E* - U(E*) = 0 since W E* = -E*"""
        prec = self.prec // self.norm
        trace = self.algebra.trace_level_one(self.algebra.e_star(), prec)
        zero = USeries.zero(self.field, prec)
        return CheckResult.from_reports(
            identical(trace, zero, self.pi, "Tr(Estar)", "0"), values={'prec': prec})
