import pytest

from drinfeld_forms.algebra import INFINITY, RatK, residue_field
from drinfeld_forms.core.errors import InsufficientPrecision, NotInSpan, NotPiIntegral
from drinfeld_forms.forms import Level, SeriesForm
from drinfeld_forms.operators import partial
from drinfeld_forms.structure import (IsobarPoly, ResIsobarPoly, ad_bd, enumerate_monomials,
                                      filtration, filtration_by_search, isobaric_coprime,
                                      isobaric_divide_power, isobaric_solve, reduce_isobaric,
                                      solve_prec)


def test_enumerate_monomials():
    assert enumerate_monomials(3, 2, 0) == [(1, 0)]
    assert enumerate_monomials(3, 2, 1) == []
    assert enumerate_monomials(3, 4, 1) == [(0, 1)]
    assert enumerate_monomials(3, 8, 0) == [(4, 0), (0, 2)]


def test_solve_prec():
    assert solve_prec(3, 8, 0) == 10
    assert solve_prec(3, 2, 1) == 8


def test_solve_generators(library):
    assert isobaric_solve(library.g1(20), library).to_triples() == [[1, 0, "1"]]
    assert isobaric_solve(library.h(20), library).to_triples() == [[0, 1, "1"]]
    assert isobaric_solve(library.delta(20), library).to_triples() == [[0, 2, "2"]]


@pytest.mark.parametrize('names', [('g1', 'h'), ('g1', 'delta'), ('h', 'delta'), ('delta', 'delta')])
def test_solve_is_multiplicative_and_expands_back(library, names):
    left, right = (library.form(name, prec=40) for name in names)
    product = left * right
    phi = isobaric_solve(product, library)
    assert phi.terms == (isobaric_solve(left, library) * isobaric_solve(right, library)).terms
    assert phi.expand(library, 40).agrees_with(product.series)


def test_solve_rejects_level_pi(library, pi_t):
    with pytest.raises(NotInSpan):
        isobaric_solve(library.e_star(pi_t, 20), library)


def test_solve_rejects_non_modular(library):
    # E has weight 2 and type 1, a space with no monomials
    with pytest.raises(NotInSpan):
        isobaric_solve(library.e(20), library)


def test_solve_needs_precision(library):
    with pytest.raises(InsufficientPrecision):
        isobaric_solve(library.delta(6), library)


def test_ad_bd_degree_one(library, pi_t):
    a_d, b_d = ad_bd(pi_t, library)
    assert a_d.to_triples() == [[1, 0, "1"]]
    assert [mono for mono, _ in b_d.terms] == [(0, 1)]
    assert isobaric_coprime(reduce_isobaric(a_d, pi_t), reduce_isobaric(b_d, pi_t))


def test_ad_bd_degree_two(library, pi_t2):
    a_d, b_d = ad_bd(pi_t2, library)
    assert a_d.weight == 8
    assert b_d.weight == 10
    assert isobaric_coprime(reduce_isobaric(a_d, pi_t2), reduce_isobaric(b_d, pi_t2))


def test_reduce(library, pi_t, T):
    phi = isobaric_solve(library.delta(20), library)
    assert reduce_isobaric(phi, pi_t).to_triples() == [[0, 2, "2"]]
    bad = IsobarPoly.from_dict(3, 4, 1, {(0, 1): RatK.one(T.field) / T})
    with pytest.raises(NotPiIntegral):
        reduce_isobaric(bad, pi_t)


def test_isobaric_rejects_wrong_monomial():
    with pytest.raises(ValueError):
        IsobarPoly(3, 4, 1, (((1, 0), None),))


def _res(pi, weight, type_, *monos):
    residues = residue_field(pi)
    return ResIsobarPoly(residues, 3, weight, type_, tuple((m, residues.one) for m in monos))


def test_divide_power(pi_t):
    x = _res(pi_t, 2, 0, (1, 0))
    y2 = _res(pi_t, 8, 0, (0, 2))
    assert isobaric_divide_power(y2, x)[0] == 0
    e, quotient = isobaric_divide_power(_res(pi_t, 8, 1, (2, 1)), x)
    assert e == 2
    assert quotient.to_triples() == [[0, 1, "1"]]
    assert isobaric_divide_power(_res(pi_t, 8, 0), x) == (INFINITY, None)


def test_coprime(pi_t):
    x = _res(pi_t, 2, 0, (1, 0))
    y = _res(pi_t, 4, 1, (0, 1))
    xy = _res(pi_t, 6, 1, (1, 1))
    assert isobaric_coprime(x, y)
    assert not isobaric_coprime(xy, y)
    assert not isobaric_coprime(x, _res(pi_t, 2, 0))


def test_filtration_of_generators(library, pi_t):
    assert filtration(library.g1(20), pi_t, library) == 0
    assert filtration(library.delta(20), pi_t, library) == 8
    pi_h = library.h(20) * RatK.coerce(pi_t.field, pi_t.pi)
    assert filtration(pi_h, pi_t, library) == -INFINITY


def test_filtration_other_primes(library, pi_t1, pi_t2):
    assert filtration(library.delta(20), pi_t1, library) == 8
    assert filtration(library.gd(pi_t2, 20), pi_t2, library) == 0


def test_filtration_drops_by_g1(library, pi_t):
    """g1 Delta = Delta modulo T, so its filtration is 8 rather than 10"""
    form = library.g1(30) * library.delta(30)
    assert filtration(form, pi_t, library) == 8
    assert filtration_by_search(form, pi_t, library) == 8


@pytest.mark.parametrize('name', ['g1', 'h', 'delta'])
def test_filtration_matches_search(library, pi_t, name):
    form = library.form(name, prec=30)
    fast = filtration(form, pi_t, library)
    assert fast == filtration_by_search(form, pi_t, library)
    assert (form.weight - fast) % (pi_t.norm - 1) == 0


def test_filtration_of_derivative(library, pi_t):
    """d(g1) has weight 4 and is a nonzero multiple of h"""
    derivative = partial(library.g1(20), library)
    assert filtration(derivative, pi_t, library) == 4


def test_filtration_needs_integral_input(library, pi_t, T):
    form = SeriesForm(library.h(20).series / T, 4, 1, Level.one())
    with pytest.raises(NotPiIntegral):
        filtration(form, pi_t, library)
