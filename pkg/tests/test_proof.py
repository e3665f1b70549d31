import json

import pytest

from drinfeld_forms.core.encoders import dumps
from drinfeld_forms.core.errors import NotAnEigenform, PremiseViolated
from drinfeld_forms.operators import parse_form
from drinfeld_forms.operators.proof import FILTRATION_DROP, proof_trace


@pytest.fixture(scope='module')
def delta_report(algebra):
    f = parse_form(algebra, "delta + T^4*iota(delta)")
    g = parse_form(algebra, "Estar*(delta - T^4*iota(delta))")
    return proof_trace(f, g, algebra)


def test_delta_pair_eigenvalues(delta_report):
    assert delta_report.alpha == 1
    assert delta_report.beta == 1
    assert delta_report.weight == 8


def test_delta_pair_chain(delta_report):
    """Every intermediate congruence of the argument holds"""
    assert delta_report.premise
    assert delta_report.h_integral
    assert delta_report.rewrite_holds
    assert delta_report.f_congruence
    assert delta_report.h_star_congruence
    assert delta_report.h_gd_congruence
    assert delta_report.h_bound_holds
    assert delta_report.chain_holds


def test_delta_pair_filtration_drops(delta_report):
    """w(F) is q^2 - 1 instead of (k - 1)(q - 1) + k, so no contradiction arises"""
    assert delta_report.f_filtration == 8
    assert delta_report.hypothesis_filtration == 22
    assert not delta_report.hypothesis_holds
    assert delta_report.outcome == FILTRATION_DROP


def test_report_serializes(delta_report):
    data = json.loads(dumps(delta_report))
    assert data['outcome'] == FILTRATION_DROP
    assert data['premise']['verdict'] is True
    assert data['pi'] == "T"


def test_premise_violated(algebra):
    f = parse_form(algebra, "delta + T^4*iota(delta)")
    g = parse_form(algebra, "g1*delta + T^5*iota(g1*delta)")
    with pytest.raises(PremiseViolated):
        proof_trace(f, g, algebra)


def test_weight_mismatch(algebra):
    f = parse_form(algebra, "delta + T^4*iota(delta)")
    with pytest.raises(PremiseViolated):
        proof_trace(f, f, algebra)


def test_needs_eigenforms(algebra):
    f = parse_form(algebra, "delta")
    g = parse_form(algebra, "Estar*(delta - T^4*iota(delta))")
    with pytest.raises(NotAnEigenform):
        proof_trace(f, g, algebra)
