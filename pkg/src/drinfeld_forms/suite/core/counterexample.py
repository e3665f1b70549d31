""" drinfeld_forms/suite/core/counterexample.py

The discriminant example: Delta is killed by its Serre derivative, so
f = Delta + pi^{k/2} Delta(pi z) and g = E* (Delta - pi^{k/2} Delta(pi z))
satisfy Theta f = g modulo pi with equal W-eigenvalues.  The filtration of
the trace F drops, which is why the filtration hypothesis cannot be removed.
"""

from typing import Dict

from ...algebra import USeries, series_vpi
from ...core.encoders import canonical_number
from ...operators import (OldPoly, congruent, eigenvalue, identical, minus_pair, partial,
                          partial_series, plus_pair, theta, w_action)
from ...operators.proof import FILTRATION_DROP, proof_trace
from ...structure import filtration, solve_prec
from ..base import BaseSuite, CheckResult


class Counterexample(BaseSuite):
    """Replays the Delta counterexample and the chain of congruences around it"""

    shortname = 'counterexample'
    description = 'Delta counterexample to dropping the filtration hypothesis'

    def _pairs(self, f: OldPoly):
        e_star = self.algebra.e_star()
        return plus_pair(f), e_star * minus_pair(f)

    def check_delta_is_theta_stable(self) -> CheckResult:
        delta = self.library.delta(self.prec)
        derivative = partial(delta, self.library).series
        zero = USeries.zero(self.field, derivative.prec)
        theta_delta = theta(delta.series).truncate(self.prec)
        e_delta = (self.library.e(self.prec).series * delta.series).truncate(self.prec)
        return CheckResult.from_reports(
            identical(derivative, zero, self.pi, "d(delta)", "0"),
            identical(theta_delta, e_delta, self.pi, "Theta(delta)", "E*delta"))

    def check_g1_frobenius_delta(self) -> CheckResult:
        reports = []
        delta = self.library.delta(self.prec).series
        e_series = self.library.e(self.prec).series
        for i in (1, 2):
            exponent = self.q ** i
            weight = (self.q - 1) * exponent + self.q * self.q - 1
            product = self.library.power('g1', exponent, prec=self.prec) * delta
            product = product.truncate(self.prec)
            derivative = partial_series(product, weight, e_series)
            zero = USeries.zero(self.field, derivative.prec)
            reports.append(identical(derivative, zero, self.pi, f"d(g1^{exponent}*delta)", "0"))
        return CheckResult.from_reports(*reports)

    def check_pair_eigenvalues(self) -> CheckResult:
        values: Dict[str, object] = {}
        passed = True
        delta = self.algebra.generator('delta')
        gd_h = self.algebra.generator('gd') * self.algebra.generator('h')
        for name, f in (('delta', delta), ('gd*h', gd_h)):
            plus, minus = eigenvalue(plus_pair(f)), eigenvalue(minus_pair(f))
            values[f"plus({name})"] = plus
            values[f"minus({name})"] = minus
            passed = passed and plus == 1 and minus == -1
        return CheckResult(passed, values=values)

    def check_gk_near_one(self) -> CheckResult:
        reports = []
        values: Dict[str, object] = {}
        passed = True
        prec = min(self.prec, 120)
        one = USeries.constant(self.field, 1, prec)
        for k in sorted({2, 4, self.q * self.q - 1}):
            gk = self.algebra.gk_form(k)
            reports.append(congruent(self.algebra.flatten(gk, prec), one, self.pi, 1,
                                     f"g_({k})", "1"))
            valuation = series_vpi(self.algebra.flatten(w_action(gk), prec), self.pi)
            bound = (k - 1) * (self.norm - 1) // 2 + k - 1
            values[f"v(W g_({k}))"] = canonical_number(valuation)
            values[f"bound({k})"] = bound
            passed = passed and valuation >= bound
        return CheckResult(passed and all(reports), reports=reports, values=values)

    def check_weight_two_trace(self) -> CheckResult:
        """F = Tr(E* g_(2)) lies in weight q^d + 1 and keeps that filtration"""
        weight = self.norm + 1
        prec = max(solve_prec(self.q, weight, 1), min(self.prec // self.norm, 40))
        f = self.algebra.e_star() * self.algebra.gk_form(2)
        big_f = self.algebra.trace_form(f, prec, "F")
        e_star = self.library.e_star(self.pi, prec).series
        w = filtration(big_f, self.pi, self.library)
        report = congruent(big_f.series, e_star, self.pi, 1, "F", "Estar")
        return CheckResult(bool(report) and w == weight, reports=[report],
                           values={'filtration': canonical_number(w), 'expected': weight})

    def check_delta_replay(self) -> CheckResult:
        delta = self.algebra.generator('delta')
        f, g = self._pairs(delta)
        k = self.q * self.q - 1
        alpha, beta = eigenvalue(f), eigenvalue(g)
        report = proof_trace(f, g, self.algebra)
        premise = report.premise
        bound = (k - 1) * (self.norm - 1) + k
        passed = (bool(premise) and alpha == 1 and beta == 1 and report.chain_holds
                  and report.f_filtration == k and k < bound
                  and report.outcome == FILTRATION_DROP)
        return CheckResult(passed, f"outcome {report.outcome}", reports=[premise],
                           values={'alpha': alpha, 'beta': beta, 'trace': report,
                                   'hypothesis': bound})

    def check_frobenius_delta_replay(self) -> CheckResult:
        """The same argument with f built from g1^q Delta, also killed by DEL"""
        base = self.algebra.generator('g1') ** self.q * self.algebra.generator('delta')
        f, g = self._pairs(base)
        report = proof_trace(f, g, self.algebra)
        passed = report.chain_holds and report.outcome == FILTRATION_DROP
        return CheckResult(passed, f"outcome {report.outcome}", values={'trace': report})

