import json

import pytest

from drinfeld_forms.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, cli, cli_main
from drinfeld_forms.core.logging import logger
from drinfeld_forms.operators.proof import FILTRATION_DROP


@pytest.fixture(autouse=True)
def reset_logging():
    yield
    logger.remove()


@pytest.fixture
def run(tmp_path, monkeypatch):
    """Calls the cli with a throwaway log file and returns its exit code"""
    for name in ('Q', 'R', 'MODULUS', 'PI', 'PREC', 'JOBS', 'LOG_LEVEL'):
        monkeypatch.delenv(f"DRINFELD_FORMS_{name}", raising=False)

    def _run(*argv):
        return cli_main([*argv, '--log-file', str(tmp_path / 'cli.log')])
    return _run


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_expand(run, capsys):
    assert run('expand', '--form', 'delta', '--prec', '12') == EXIT_OK
    data = _json(capsys)
    assert data['coeffs'][2] == "2"
    assert (data['weight'], data['type'], data['level']) == (8, 0, 'one')
    assert (data['q'], data['pi']) == (3, 'T')


def test_usage_errors(run, capsys):
    assert cli_main([]) == EXIT_USAGE
    assert run('expand') == EXIT_USAGE
    assert run('expand', '--form', 'eta', '--prec', '12') == EXIT_USAGE
    assert run('verify', '--prec', '10') == EXIT_USAGE
    assert run('verify', '--suite', 'nope', '--prec', '36') == EXIT_USAGE
    assert capsys.readouterr().out == ""


def test_filtration(run, capsys):
    assert run('filtration', '--form', 'delta', '--prec', '20') == EXIT_OK
    data = _json(capsys)
    assert data['filtration'] == 8
    assert data['isobaric'] == [[0, 2, "2"]]


def test_filtration_from_expand_output(run, tmp_path, capsys):
    path = str(tmp_path / 'form.json')
    assert run('expand', '--form', 'g1*delta', '--prec', '30', '--out', path) == EXIT_OK
    assert run('filtration', '--form', path) == EXIT_OK
    data = _json(capsys)
    assert (data['weight'], data['filtration']) == (10, 8)


def test_filtration_rejects_level_pi(run):
    assert run('filtration', '--form', 'Estar', '--prec', '20') == EXIT_USAGE


def test_op_congruent(run, capsys):
    assert run('op', 'congruent', '--form', 'delta', '--against', 'g1*delta',
               '--prec', '20') == EXIT_OK
    assert _json(capsys)['verdict'] is True
    assert run('op', 'congruent', '--form', 'h', '--against', 'g1', '--prec', '20') == EXIT_FAILED
    assert _json(capsys)['witness'] == 0
    assert run('op', 'congruent', '--form', 'h', '--prec', '20') == EXIT_USAGE


def test_op_w(run, capsys):
    assert run('op', 'w', '--form', 'Estar', '--prec', '10') == EXIT_OK
    assert _json(capsys)['eigenvalue'] == -1
    assert run('op', 'w', '--in', 'delta + T^4*iota(delta)', '--prec', '10') == EXIT_OK
    assert _json(capsys)['eigenvalue'] == 1


def test_proof_trace(run, capsys):
    code = run('proof-trace', '--f', 'delta + T^4*iota(delta)',
               '--g', 'Estar*(delta - T^4*iota(delta))', '--prec', '40')
    assert code == EXIT_OK
    assert _json(capsys)['outcome'] == FILTRATION_DROP


def test_proof_trace_premise_violated(run, capsys):
    code = run('proof-trace', '--f', 'delta + T^4*iota(delta)',
               '--g', 'g1*delta + T^5*iota(g1*delta)', '--prec', '40')
    assert code == EXIT_FAILED
    assert capsys.readouterr().out == ""


def test_verify(run, capsys):
    assert run('verify', '--suite', 'congruences', '--prec', '36') == EXIT_OK
    results = _json(capsys)
    assert [r['suite'] for r in results] == ['congruences']
    assert results[0]['passed'] is True


def test_verify_table(run, capsys):
    assert run('verify', '--suite', 'congruences', '--prec', '36', '--format', 'table') == EXIT_OK
    out = capsys.readouterr().out
    assert "suite congruences" in out
    assert "PASS  gd_is_one" in out
    assert "FAIL" not in out


def test_environment_sets_precision(run, monkeypatch, capsys):
    monkeypatch.setenv('DRINFELD_FORMS_PREC', '7')
    assert run('expand', '--form', 'g1') == EXIT_OK
    assert len(_json(capsys)['coeffs']) == 7


def test_version():
    with pytest.raises(SystemExit) as exit_info:
        cli(['--version'])
    assert exit_info.value.code == 0
