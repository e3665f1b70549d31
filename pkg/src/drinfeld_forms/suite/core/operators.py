""" drinfeld_forms/suite/core/operators.py

Degeneracy operators: the power sums behind U, integrality of U and V, and
the characteristic p collapses U V = 0 and Tr = id on level one.
"""

import random
from typing import Dict, List

from ...algebra import PolyA, RatK, USeries, series_vpi
from ...carlitz import generating_identity_defect, inverse_root_power_sums
from ...core.encoders import canonical_number
from ...operators import identical, iota_slash, u_operator, v_operator
from ..base import BaseSuite, CheckResult

POWER_SUM_COUNT = 50
SAMPLE_COUNT = 20
SAMPLE_PREC = 24
SAMPLE_SEED = 20221


class Operators(BaseSuite):
    """U, V and the trace on explicit series"""

    shortname = 'operators'
    description = 'U, V and trace operators'

    def _samples(self) -> List[USeries]:
        """Pi-integral series with scattered valuations, the same on every run"""
        rng = random.Random(f"{SAMPLE_SEED}:{self.q}:{self.pi.to_text()}")  # nosec B311
        field = self.field
        pi = RatK.coerce(field, self.pi.pi)
        samples = []
        for _ in range(SAMPLE_COUNT):
            shift = rng.randrange(3)
            coeffs = []
            for _ in range(SAMPLE_PREC):
                poly = PolyA(field, [rng.randrange(field.q) for _ in range(rng.randrange(4))])
                coeffs.append(RatK.coerce(field, poly) * pi ** (shift + rng.randrange(2)))
            if not any(coeffs):
                coeffs[1] = pi ** shift
            samples.append(USeries(field, coeffs))
        return samples

    def check_power_sum_identity(self) -> CheckResult:
        sums = inverse_root_power_sums(self.pi, POWER_SUM_COUNT)
        defect = generating_identity_defect(sums)
        detail = "" if defect is None else f"fails at t^{defect[0]} u^{defect[1]}"
        return CheckResult(defect is None, detail, values={'count': POWER_SUM_COUNT})

    def check_u_integrality(self) -> CheckResult:
        failures = []
        for index, f in enumerate(self._samples()):
            before = series_vpi(f, self.pi)
            after = series_vpi(u_operator(f, self.pi), self.pi)
            if after < before:
                failures.append([index, canonical_number(before), canonical_number(after)])
        return CheckResult(not failures, values={'samples': SAMPLE_COUNT, 'failures': failures})

    def check_v_integrality(self) -> CheckResult:
        failures = []
        prec = 2 * SAMPLE_PREC
        for index, f in enumerate(self._samples()):
            before = series_vpi(f, self.pi)
            after = series_vpi(v_operator(f, self.pi, prec), self.pi)
            if after < before:
                failures.append([index, canonical_number(before), canonical_number(after)])
        return CheckResult(not failures, values={'samples': SAMPLE_COUNT, 'failures': failures})

    def check_u_kills_v(self) -> CheckResult:
        reports = []
        prec = max(self.prec // self.norm, 2)
        for name in ('g1', 'h', 'delta'):
            f = self.library.form(name, prec=prec).series
            image = u_operator(v_operator(f, self.pi), self.pi)
            reports.append(identical(image, USeries.zero(self.field, image.prec), self.pi,
                                     f"U(V({name}))", "0"))
        return CheckResult.from_reports(*reports)

    def check_trace_fixes_level_one(self) -> CheckResult:
        reports = []
        prec = max(self.prec // self.norm, 2)
        for name in ('g1', 'h', 'delta'):
            f = self.algebra.generator(name)
            traced = self.algebra.trace_level_one(f, prec)
            reports.append(identical(traced, self.algebra.flatten(f, prec), self.pi,
                                     f"Tr({name})", name))
        return CheckResult.from_reports(*reports)

    def check_rescaling_slash_valuation(self) -> CheckResult:
        """pi^{k/2} f(pi z) has valuation at least k/2 on integral level one forms"""
        values: Dict[str, object] = {}
        passed = True
        prec = max(self.prec // self.norm, 2)
        for name in ('g1', 'h', 'delta', 'gd'):
            form = self.library.form(name, self.pi, prec)
            valuation = series_vpi(iota_slash(form.series, self.pi, form.weight), self.pi)
            values[name] = [canonical_number(valuation), form.weight // 2]
            passed = passed and valuation >= form.weight // 2
        return CheckResult(passed, values=values)
