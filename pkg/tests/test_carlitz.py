import pytest

from drinfeld_forms.algebra import RatK
from drinfeld_forms.carlitz import (bracket_D_L, carlitz_coeffs, generating_identity_defect,
                                    goss_poly, inv_exp_coeffs, inverse_root_power_sums,
                                    t_series, zeta_ratio)
from drinfeld_forms.core.errors import NotEvenWeight


def test_carlitz_module(T):
    assert carlitz_coeffs(T).coeffs == (T, T ** 0)
    assert carlitz_coeffs(T ** 2).coeffs == (T ** 2, T ** 3 + T, T ** 0)


def test_carlitz_is_additive_in_a(T):
    left = carlitz_coeffs(T ** 2 + T)
    right = carlitz_coeffs(T ** 2) + carlitz_coeffs(T)
    assert left.coeffs == right.coeffs


def test_carlitz_composes(T):
    """rho_{T(T+1)} = rho_T o rho_{T+1}"""
    product = carlitz_coeffs(T * (T + 1))
    composed = carlitz_coeffs(T).compose(carlitz_coeffs(T + 1))
    assert product.coeffs == composed.coeffs


def test_brackets(T):
    bracket, d_1, l_1 = bracket_D_L(T.field, 1)
    assert bracket == d_1 == l_1 == T ** 3 - T
    bracket, d_2, l_2 = bracket_D_L(T.field, 2)
    assert bracket == T ** 9 - T
    assert d_2 == (T ** 9 - T) * (T ** 3 - T) ** 3
    assert l_2 == (T ** 9 - T) * (T ** 3 - T)


def test_t_series(T):
    """t_T = u^3 - T u^5 + T^2 u^7 - ... over F_3"""
    expected = ["0", "0", "0", "1", "0", "2*T", "0", "T^2"]
    assert t_series(T, 8).to_texts() == expected


def test_t_series_needs_monic(T):
    with pytest.raises(ValueError):
        t_series(T * 2, 8)


def test_t_series_order(T):
    ta = t_series(T ** 2 + 1, 12)
    assert ta.order() == 9
    assert ta[9] == 1


def test_inverse_exponential(T):
    f3 = T.field
    coeffs = inv_exp_coeffs(f3, 4)
    assert coeffs[0] == 0
    assert coeffs[1] == -(RatK.one(f3) / (T ** 3 - T))


def test_zeta_ratio(T):
    f3 = T.field
    assert zeta_ratio(f3, 2) == -(RatK.one(f3) / (T ** 3 - T))
    with pytest.raises(NotEvenWeight):
        zeta_ratio(f3, 3)


def test_goss_polynomials(T):
    f3 = T.field
    assert goss_poly(f3, 1).support() == [1]
    assert goss_poly(f3, 2).support() == [2]
    assert goss_poly(f3, 3).support() == [3]
    g4 = goss_poly(f3, 4)
    assert g4.support() == [2, 4]
    assert g4.coefficient(4) == 1
    assert g4.coefficient(2) == RatK.one(f3) / (T ** 3 - T)


def test_power_sums_leading(T, pi_t1):
    sums = inverse_root_power_sums(pi_t1, 6)
    assert sums[1].to_texts() == ["0", "T+1", "0", "0", "0", "0"]
    assert sums[2].to_texts()[:3] == ["0", "0", "T^2+2*T+1"]
    with pytest.raises(IndexError):
        sums[0]


@pytest.mark.parametrize('name', ['pi_t', 'pi_t2'])
def test_power_sum_generating_identity(name, request):
    pi = request.getfixturevalue(name)
    assert generating_identity_defect(inverse_root_power_sums(pi, 30)) is None


def test_power_sum_orders(pi_t2):
    """ord s_n >= ceil(n / q^d)"""
    sums = inverse_root_power_sums(pi_t2, 30)
    for n in range(1, sums.max_index + 1):
        order = sums[n].order()
        assert order is None or order >= -(-n // pi_t2.norm)


def test_power_sums_are_integral(pi_t):
    sums = inverse_root_power_sums(pi_t, 12)
    assert all(s.is_integral() for s in sums.sums)
    # s_n is divisible by pi
    assert all(pi_t.pi.divides(c.num) for s in sums.sums for c in s.coeffs)
