import pytest

from drinfeld_forms.algebra import RatK, USeries, series_vpi
from drinfeld_forms.carlitz import t_series
from drinfeld_forms.core.errors import OddWeightUnsupported
from drinfeld_forms.operators import (congruent, half_weight, identical, iota_slash, partial,
                                      pi_power, theta, u_operator, v_operator)
from drinfeld_forms.structure import isobaric_solve


def test_theta_basics(f3):
    assert theta(USeries.constant(f3, 1, 4)).is_zero()
    image = theta(USeries.monomial(f3, 1, 4))
    assert image.prec == 5
    assert image[2] == -1
    # q u^{q+1} vanishes in characteristic 3
    assert theta(USeries.monomial(f3, 3, 6)).is_zero()


def test_theta_delta_is_e_delta(library):
    """Theta Delta = E Delta exactly, not only modulo pi"""
    delta = library.delta(40).series
    product = (library.e(40).series * delta).truncate(40)
    assert theta(delta).truncate(40) == product


def test_partial_of_frobenius_times_delta(library):
    g1 = library.g1(40)
    form = g1 * g1 * g1 * library.delta(40)
    assert form.weight == 14
    assert partial(form, library).series.is_zero()


def test_partial_shifts_weight_and_type(library):
    derivative = partial(library.g1(20), library)
    assert (derivative.weight, derivative.type) == (4, 1)
    assert derivative.name == "d(g1)"
    assert [mono for mono, _ in isobaric_solve(derivative, library).terms] == [(0, 1)]


def test_v_of_u_is_t_pi(f3, pi_t):
    image = v_operator(USeries.monomial(f3, 1, 4), pi_t)
    assert image.prec == 12
    assert image == t_series(pi_t.pi, 12)


def test_v_multiplies_order(library, pi_t2):
    image = v_operator(library.h(4).series, pi_t2)
    assert image.order() == 9


def test_u_precision(library, pi_t):
    assert u_operator(library.g1(10).series, pi_t).prec == 4


@pytest.mark.parametrize('name', ['g1', 'h', 'delta'])
def test_u_kills_v(library, pi_t, name):
    f = library.form(name, prec=20).series
    image = u_operator(v_operator(f, pi_t), pi_t)
    assert image.is_zero()


def test_u_fixes_e_star(library, pi_t):
    e_star = library.e_star(pi_t, 60).series
    image = u_operator(e_star, pi_t)
    assert identical(image, e_star.truncate(image.prec), pi_t)


def test_u_keeps_integrality(f3, T, pi_t):
    f = USeries(f3, [0, T, T ** 2 + 1, 1, T * (T + 1), 2, T ** 3], prec=12)
    assert series_vpi(u_operator(f, pi_t), pi_t) >= series_vpi(f, pi_t)
    assert series_vpi(u_operator(f * T ** 2, pi_t), pi_t) >= 2


def test_u_is_linear(library, pi_t):
    f, g = library.g1(30).series, library.delta(30).series
    assert u_operator(f + g, pi_t) == u_operator(f, pi_t) + u_operator(g, pi_t)


def test_iota_slash(library, pi_t):
    delta = library.delta(10)
    image = iota_slash(delta.series, pi_t, delta.weight)
    assert series_vpi(image, pi_t) >= 4
    assert image == v_operator(delta.series, pi_t).scale(pi_power(pi_t, 4))


def test_half_weight():
    assert half_weight(8) == 4
    with pytest.raises(OddWeightUnsupported):
        half_weight(3)


def test_pi_power(pi_t, T):
    assert pi_power(pi_t, -2) == RatK(T ** 0, T ** 2)


def test_congruence_report(f3, T, pi_t):
    u = USeries.monomial(f3, 1, 3)
    other = u + USeries.monomial(f3, 2, 3, RatK(T ** 0, T))
    report = congruent(u, other, pi_t, 1, "u", "u + u^2/pi")
    assert not report
    assert report.witness == 2
    assert report.valuation == -1
    assert report.coefficient == "2/T"
    data = report.to_dict()
    assert data['verdict'] is False
    assert data['pi'] == "T"


def test_congruence_of_equal_series(library, pi_t):
    g1 = library.g1(20).series
    report = identical(g1, g1, pi_t)
    assert report
    assert report.valuation == "inf"
    assert report.order == "inf"
    assert 'witness' not in report.to_dict()


def test_congruence_uses_smaller_precision(f3, pi_t):
    short = USeries(f3, [1], prec=2)
    longer = USeries(f3, [1, 0, 5], prec=4)
    report = congruent(short, longer, pi_t, 3)
    assert report.prec == 2
    assert report
