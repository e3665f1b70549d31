from dataclasses import replace

import pytest

from drinfeld_forms.core.config import SuiteConfig
from drinfeld_forms.core.encoders import dumps
from drinfeld_forms.core.errors import UnknownSuite
from drinfeld_forms.forms import FormLibrary
from drinfeld_forms.structure import enumerate_monomials
from drinfeld_forms.suite import (SUITES, BaseSuite, CheckResult, SuiteResult, run_suite,
                                  run_suites, suite_ids)


@pytest.fixture(scope='module')
def config():
    return SuiteConfig(q=3, pi='T', prec=36)


@pytest.fixture(scope='module')
def merged(config):
    return run_suite('all', config, FormLibrary(config.field, config.prec))


def test_base_suite_shortname():
    assert BaseSuite.shortname == 'base'


def test_base_suite_guard():
    """Tests that the final methods cannot be overridden"""
    with pytest.raises(TypeError):
        class NewSuite(BaseSuite):
            def run(self):
                return None


def test_custom_suite(config, caplog):
    class NewSuite(BaseSuite):
        shortname = 'new'

        def check_ok(self):
            return CheckResult(True, values={'q': self.q})

        def check_boom(self):
            raise ValueError("no luck")

    result = NewSuite(config).run()
    assert [c.check for c in result.checks] == ['boom', 'ok']
    assert not result.passed
    boom = result.failures()[0]
    assert 'ValueError' in boom.detail
    assert result.checks[1].values == {'q': 3}
    assert "new/boom raised ValueError" in caplog.text


def test_registry():
    assert sorted(SUITES) == ['congruences', 'counterexample', 'filtration', 'operators']
    assert suite_ids(['all']) == sorted(SUITES)
    assert suite_ids(['operators', 'congruences']) == ['congruences', 'operators']
    with pytest.raises(UnknownSuite):
        suite_ids(['nope'])


def test_hash_ignores_wall_time():
    checks = [CheckResult(True)]
    first = SuiteResult('new', {'q': 3}, checks, wall_time=1.0)
    second = SuiteResult('new', {'q': 3}, checks, wall_time=2.0)
    assert first.hash == second.hash
    assert 'wall_time' not in first.to_dict()
    assert first.wall_time == 1.0


def test_reruns_are_reproducible(config):
    library = FormLibrary(config.field, config.prec)
    first, = run_suites(['congruences'], config, library)
    second, = run_suites(['congruences'], config, library)
    assert first.hash == second.hash
    assert dumps(first) == dumps(second)


def test_worker_pool_matches_serial_run(config):
    """The same suites give the same digests on one process and on two"""
    requested = ['congruences', 'operators']
    serial = run_suites(requested, config)
    pooled = run_suites(requested, replace(config, jobs=2))
    assert [r.suite for r in pooled] == requested
    assert [r.hash for r in pooled] == [r.hash for r in serial]
    assert [dumps(r) for r in pooled] == [dumps(r) for r in serial]


@pytest.mark.parametrize('q, pi, prec', [(3, 'T^2+1', 81), (5, 'T', 100)])
def test_suites_beyond_the_linear_prime(q, pi, prec):
    target = SuiteConfig(q=q, pi=pi, prec=prec)
    for result in run_suites(['congruences', 'operators'], target):
        assert [c.check for c in result.failures()] == []
        assert result.config['q'] == q
        assert result.config['pi'] == pi


def test_all_suites_pass(merged):
    assert [c.check for c in merged.failures()] == []
    assert merged.passed
    assert merged.suite == 'all'


def test_merged_check_names(merged):
    prefixes = {c.check.split('/')[0] for c in merged.checks}
    assert prefixes == set(SUITES)
    assert 'congruences/gd_is_one' in [c.check for c in merged.checks]
    assert merged.config['prec'] == 36


def test_search_oracle_covers_every_monomial(config):
    suite = SUITES['filtration'](config, FormLibrary(config.field, config.prec))
    names = [name for name, _ in suite._monomial_forms()]  # pylint: disable=protected-access
    expected = [mono for k in range(1, 17) for t in range(2)
                for mono in enumerate_monomials(3, k, t)]
    assert [f"g1^{i}*h^{j}" for i, j in expected] == [n for n in names if ' + ' not in n]
    assert 'g1^4*h^0 + g1^0*h^2' in names
    result = suite.check_search_oracle()
    assert result.passed
    assert result.values['forms'] >= len(expected)
    assert result.values['mismatches'] == []
