import pytest

from drinfeld_forms.algebra import PolyA, RatK, USeries, series_reduce_mod_pi, series_vpi
from drinfeld_forms.core.errors import NotEvenWeight, TypeSupportViolation, UnknownForm
from drinfeld_forms.forms import (FormLibrary, Level, SeriesForm, delta_series, e_series,
                                  e_star_series, eisenstein_tilde, g1_series, gd_from_degree,
                                  gd_series, h_series, monic_cutoff)
from drinfeld_forms.operators import congruent, partial


def test_monic_cutoff():
    assert monic_cutoff(3, 28) == 3
    assert monic_cutoff(3, 27) == 2
    assert monic_cutoff(3, 1) == -1


def test_eisenstein_constant_term(T):
    """E~_{q-1}(0) = -zeta(q-1)/pi~^{q-1} = 1/D_1"""
    f3 = T.field
    series = eisenstein_tilde(f3, 2, 20)
    assert series[0] == RatK.one(f3) / (T ** 3 - T)
    assert series[1] == 0


def test_eisenstein_needs_divisible_weight(f3):
    with pytest.raises(NotEvenWeight):
        eisenstein_tilde(f3, 3, 10)


def test_eisenstein_cutoff_invariance(f3):
    """Raising the precision past a power of q adds a monic degree but
    leaves the lower coefficients alone"""
    assert eisenstein_tilde(f3, 2, 28).truncate(27) == eisenstein_tilde(f3, 2, 27)


def test_g1_is_one_modulo_primes(library, pi_t, pi_t1):
    g1 = library.g1(40)
    one = USeries.constant(g1.field, 1, 40)
    assert g1.series[0] == 1
    assert congruent(g1.series, one, pi_t)
    assert congruent(g1.series, one, pi_t1)


def test_g2_is_one_modulo_degree_two_prime(library, pi_t2):
    g2 = library.gd(pi_t2, 30)
    assert g2.weight == 8
    assert g2.series[0] == 1
    assert series_reduce_mod_pi(g2.series, pi_t2).to_texts() == ["1"] + ["0"] * 29


def test_delta(library):
    delta = library.delta()
    assert delta.weight == 8
    assert delta.type == 0
    assert delta.series[0] == 0
    assert delta.series.order() == 2
    assert delta.series[2].to_text() == "2"


def test_delta_is_killed_by_serre_derivative(library):
    assert partial(library.delta(), library).series.is_zero()


def test_h(library):
    h = library.h()
    assert (h.weight, h.type) == (4, 1)
    assert h.series.order() == 1
    assert h.series[1] == -1


def test_h_power_is_minus_delta(library):
    h = library.h().series
    assert (h ** 2).agrees_with(-library.delta().series)


def test_e(library):
    e = library.e().series
    assert e[1] == 1
    assert e[3] == 0


@pytest.mark.parametrize('name', ['pi_t', 'pi_t2'])
def test_e_is_minus_derivative_of_gd(library, name, request):
    pi = request.getfixturevalue(name)
    gd = library.gd(pi, 30)
    assert congruent(library.e(30).series, -partial(gd, library).series, pi)


def test_e_star(library, pi_t):
    e_star = library.e_star(pi_t)
    assert e_star.level == Level.at(pi_t)
    assert e_star.series[1] == 1
    assert series_vpi(e_star.series, pi_t) == 0
    assert congruent(e_star.series, library.e().series, pi_t)


def test_precision_stability(library):
    short = g1_series(library.field, 20)
    assert library.g1(60).series.truncate(20) == short.series
    assert library.delta(20).series == library.delta(60).series.truncate(20)


def test_library_power(library):
    g1 = library.g1(30).series
    assert library.power('g1', 4, prec=30) == (g1 ** 4).truncate(30)
    assert library.power('h', 3, prec=30) == (library.h(30).series ** 3).truncate(30)


def test_library_rejects_unknown(library):
    with pytest.raises(UnknownForm):
        library.form('gd')
    with pytest.raises(UnknownForm):
        library.form('eta')


def test_fresh_library_matches_shared(f3, library):
    fresh = FormLibrary(f3, 24)
    assert fresh.h().series == library.h(24).series


def test_type_support_enforced(f3):
    with pytest.raises(TypeSupportViolation):
        SeriesForm(USeries(f3, [0, 1], prec=3), 2, 0)
    with pytest.raises(TypeSupportViolation):
        SeriesForm(USeries(f3, [1], prec=3), 3, 0)


def test_form_arithmetic(library):
    g1, h = library.g1(20), library.h(20)
    product = g1 * h
    assert (product.weight, product.type) == (6, 1)
    assert product.name == "g1*h"
    with pytest.raises(TypeSupportViolation):
        g1 + h


def test_levels_do_not_mix(library, pi_t, pi_t1):
    with pytest.raises(ValueError):
        library.e_star(pi_t, 10) * library.e_star(pi_t1, 10)


def test_library_matches_direct_construction(f3, pi_t2, library):
    """The cache only truncates, it never changes coefficients"""
    assert delta_series(f3, 20).series == library.delta(20).series
    assert h_series(f3, 20).series == library.h(20).series
    assert e_series(f3, 20) == library.e(20).series
    assert gd_series(pi_t2, 20).series == library.gd(pi_t2, 20).series
    assert e_star_series(pi_t2, 20).series == library.e_star(pi_t2, 20).series


def test_delta_is_a_cusp_form(f3, f5):
    """-u^{q-1} + u^{2(q-1)+q-1} ... with no constant term"""
    delta = delta_series(f3, 30)
    assert delta.series.to_texts()[:8] == ["0", "0", "2", "0", "0", "0", "1", "0"]
    assert delta_series(f5, 12).series.order() == 4
    assert delta_series(f5, 12).series[4] == -1


def test_delta_from_eisenstein_series(f3):
    g1 = g1_series(f3, 30).series
    g2 = gd_from_degree(f3, 2, 30).series
    bracket = PolyA.T(f3, 3) - PolyA.T(f3)
    assert delta_series(f3, 30).series == (g1 ** 4 - g2).truncate(30) / bracket
