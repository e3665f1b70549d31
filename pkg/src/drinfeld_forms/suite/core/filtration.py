""" drinfeld_forms/suite/core/filtration.py

Weight filtration results modulo pi, cross-checked by brute force.
"""

from typing import Dict, List, Tuple

from ...algebra import INFINITY, RatK
from ...core.encoders import canonical_number
from ...forms import Level, SeriesForm
from ...operators import partial
from ...structure import (ad_bd, enumerate_monomials, filtration, filtration_by_search,
                          isobaric_coprime, isobaric_solve, reduce_isobaric, solve_prec)
from ..base import BaseSuite, CheckResult


class Filtration(BaseSuite):
    """w(g_d) = 0, w(Delta) = q^2 - 1, w(pi h) = -inf and the structure behind them"""

    shortname = 'filtration'
    description = 'Weight filtration modulo pi'

    def _sample_prec(self) -> int:
        q = self.q
        top = 2 * (q * q - 1)
        return min(self.prec, max(solve_prec(q, top, l) for l in range(q - 1)) + 8)

    def _samples(self) -> List[Tuple[str, SeriesForm]]:
        """Products of generators up to weight 2(q^2 - 1), at a precision that
        settles every weight below theirs"""
        prec = self._sample_prec()
        top = 2 * (self.q * self.q - 1)
        lib = self.library
        g1, h, delta = lib.g1(prec), lib.h(prec), lib.delta(prec)
        gd = lib.gd(self.pi, prec)
        samples = [
            ('g1', g1),
            ('h', h),
            ('delta', delta),
            ('gd', gd),
            ('g1*h', (g1 * h).truncate(prec)),
            ('h^2', (h * h).truncate(prec)),
            ('g1*delta', (g1 * delta).truncate(prec)),
            ('delta^2', (delta * delta).truncate(prec)),
        ]
        return [(name, form) for name, form in samples if form.weight <= top]

    def check_unit_filtrations(self) -> CheckResult:
        lib = self.library
        q = self.q
        prec = min(self.prec, solve_prec(q, self.norm - 1, 0) + solve_prec(q, q * q - 1, 0))
        pi_h = lib.h(prec) * RatK.coerce(self.field, self.pi.pi)
        found = {
            'gd': filtration(lib.gd(self.pi, prec), self.pi, lib),
            'delta': filtration(lib.delta(prec), self.pi, lib),
            'pi*h': filtration(pi_h, self.pi, lib),
        }
        expected = {'gd': 0, 'delta': q * q - 1, 'pi*h': -INFINITY}
        passed = all(found[name] == expected[name] for name in expected)
        values = {f"w({name})": canonical_number(w) for name, w in found.items()}
        return CheckResult(passed, values=values)

    def check_weight_congruence(self) -> CheckResult:
        """w = k (mod q^d - 1) whenever the class is nonzero"""
        values: Dict[str, object] = {}
        passed = True
        for name, form in self._samples():
            w = filtration(form, self.pi, self.library)
            values[f"w({name})"] = canonical_number(w)
            if w != -INFINITY:
                passed = passed and (form.weight - int(w)) % (self.norm - 1) == 0
        return CheckResult(passed, values=values)

    def _monomial_forms(self) -> List[Tuple[str, SeriesForm]]:
        """Every g1^i h^j of weight at most 2(q^2 - 1), then for each weight
        and type holding two or more of them, their sum"""
        q = self.q
        top = 2 * (q * q - 1)
        prec = self._sample_prec()
        forms = []
        for k in range(1, top + 1):
            for l in range(q - 1):  # noqa: E741
                monos = enumerate_monomials(q, k, l)
                parts = [SeriesForm(self.library.monomial(i, j, prec), k, l, Level.one(),
                                    f"g1^{i}*h^{j}") for i, j in monos]
                forms.extend((part.name, part) for part in parts)
                if len(parts) > 1:
                    total = parts[0]
                    for part in parts[1:]:
                        total = total + part
                    forms.append((" + ".join(part.name for part in parts), total))
        return forms

    def check_search_oracle(self) -> CheckResult:
        """The A_d division and the weight by weight search agree on every
        monomial class up to weight 2(q^2 - 1)"""
        values: Dict[str, object] = {}
        mismatches = []
        for name, form in [*self._monomial_forms(), *self._samples()]:
            fast = filtration(form, self.pi, self.library)
            slow = filtration_by_search(form, self.pi, self.library)
            values[name] = [canonical_number(fast), canonical_number(slow)]
            if fast != slow:
                mismatches.append(name)
        return CheckResult(not mismatches, f"mismatch on {', '.join(mismatches)}" if mismatches
                           else "", values={'forms': len(values), 'mismatches': mismatches})

    def check_ad_bd_coprime(self) -> CheckResult:
        """A_d and B_d = d(g_d) share no factor modulo pi"""
        a_d, b_d = ad_bd(self.pi, self.library)
        coprime = isobaric_coprime(reduce_isobaric(a_d, self.pi), reduce_isobaric(b_d, self.pi))
        return CheckResult(coprime, values={'A_d': a_d.to_text(), 'B_d': b_d.to_text()})

    def check_weight_two_spaces(self) -> CheckResult:
        """Weight two holds nothing of nonzero type, and only g1 when q = 3"""
        q = self.q
        spaces = {l: enumerate_monomials(q, 2, l) for l in range(q - 1)}
        others_empty = all(not monos for l, monos in spaces.items() if l)
        expected_zero = [(1, 0)] if q == 3 else []
        passed = others_empty and spaces[0] == expected_zero
        return CheckResult(passed, values={str(l): [list(m) for m in monos]
                                           for l, monos in spaces.items()})

    def check_partial_g1_in_span_of_h(self) -> CheckResult:
        q = self.q
        prec = min(self.prec, solve_prec(q, q + 1, 1) + 2)
        derivative = partial(self.library.g1(prec), self.library)
        phi = isobaric_solve(derivative, self.library)
        passed = [mono for mono, _ in phi.terms] == [(0, 1)]
        return CheckResult(passed, values={'d(g1)': phi.to_text()})
