import pytest

from drinfeld_forms.algebra import (INFINITY, PolyA, RatK, USeries, residue_field,
                                    series_compose, series_inv, series_reduce_mod_pi,
                                    series_root, series_vpi)
from drinfeld_forms.core.errors import (CompositionNotSupported, InsufficientPrecision,
                                        NonUnitSeries, NotPiIntegral, RootObstruction)


def test_precision_is_length(f3):
    f = USeries(f3, [1, 1], prec=5)
    assert f.prec == 5
    assert f.to_texts() == ["1", "1", "0", "0", "0"]
    with pytest.raises(InsufficientPrecision):
        f[5]
    with pytest.raises(InsufficientPrecision):
        f.truncate(6)


def test_sum_keeps_smaller_precision(f3):
    f = USeries(f3, [1, 2], prec=4)
    g = USeries(f3, [1], prec=6)
    assert (f + g).prec == 4


def test_product_precision_uses_order(f3):
    """u * (unit) is known one step further than the unit"""
    u = USeries.monomial(f3, 1, 5)
    unit = USeries(f3, [1, 1], prec=5)
    assert (u * unit).prec == 5
    assert (u * u).prec == 6


def test_inverse(f3):
    f = USeries(f3, [1, -1], prec=6)
    assert series_inv(f).to_texts() == ["1"] * 6


def test_root(f3):
    square = USeries(f3, [1, 1], prec=5) ** 2
    assert series_root(square, 2) == USeries(f3, [1, 1], prec=5)


def test_root_obstructions(f3):
    with pytest.raises(RootObstruction):
        series_root(USeries(f3, [1, 1], prec=4), 3)
    with pytest.raises(RootObstruction):
        series_root(USeries(f3, [2, 1], prec=4), 2)


def test_compose(f3):
    f = USeries(f3, [1, 1], prec=4)
    s = USeries.monomial(f3, 2, 8)
    assert series_compose(f, s) == USeries(f3, [1, 0, 1], prec=8)


def test_compose_needs_zero_constant(f3):
    with pytest.raises(CompositionNotSupported):
        series_compose(USeries(f3, [1, 1], prec=3), USeries(f3, [1, 1], prec=3))


def test_frobenius_q_matches_power(f3, T):
    f = USeries(f3, [T, 1], prec=6)
    assert f.frobenius_q().prec == 18
    assert f.frobenius_q().truncate(6) == f ** 3


def test_shift_down(f3):
    f = USeries(f3, [0, 0, 1, 2], prec=4)
    assert f.shift_down(2).to_texts() == ["1", "2"]
    with pytest.raises(NonUnitSeries):
        f.shift_down(3)


def test_valuation(f3, T, pi_t):
    f = USeries(f3, [T, RatK(T ** 2, T + 1), 0], prec=3)
    assert series_vpi(f, pi_t) == 1
    assert series_vpi(USeries.zero(f3, 4), pi_t) == INFINITY
    assert series_vpi(f / T ** 2, pi_t) == -1


def test_reduce_mod_pi(f3, T, pi_t):
    f = USeries(f3, [T + 1, RatK(PolyA.one(f3), T + 1), T], prec=3)
    assert series_reduce_mod_pi(f, pi_t).to_texts() == ["1", "1", "0"]
    with pytest.raises(NotPiIntegral):
        series_reduce_mod_pi(USeries(f3, [RatK(PolyA.one(f3), T)]), pi_t)


def test_residue_field_of_degree_two(T, pi_t2):
    residues = residue_field(pi_t2)
    # T^2 = -1 modulo T^2 + 1
    assert residues.inv(T) == -T
    assert residues.mul(T, T) == PolyA.from_int(T.field, -1)
    assert residues.reduce_rat(RatK(PolyA.one(T.field), T)) == -T


def test_residue_series_product(T, pi_t):
    residues = residue_field(pi_t)
    f = series_reduce_mod_pi(USeries(T.field, [1, T + 1], prec=3), pi_t)
    square = f * f
    assert square.to_texts() == ["1", "2", "1"]
    assert (square - square).is_zero()
    assert f.scale(residues.from_int(2)).to_texts() == ["2", "2", "0"]
