import pytest

from drinfeld_forms.algebra import (INFINITY, PolyA, PrimePi, RatK, monic_polys, parse_modulus,
                                    parse_poly, parse_rat, poly_gcd, poly_ord_at, poly_xgcd,
                                    rat_vpi)
from drinfeld_forms.core.errors import FormExpressionError, NotIrreducible


def test_canonical_text(f3, T):
    assert ((T + 1) ** 2).to_text() == "T^2+2*T+1"
    assert PolyA.from_int(f3, -1).to_text() == "2"
    assert PolyA.zero(f3).to_text() == "0"


def test_division(T):
    quot, rem = divmod(T ** 3 + 2, T + 1)
    assert quot * (T + 1) + rem == T ** 3 + 2
    assert rem.degree < 1


def test_ord_at(T, pi_t):
    """T^2 (T + 1) vanishes to order 2 at T"""
    assert poly_ord_at(T ** 2 * (T + 1), pi_t) == 2
    assert poly_ord_at(T + 1, pi_t) == 0
    assert poly_ord_at(T * 0, pi_t) == INFINITY


def test_rat_valuation(f3, T, pi_t):
    x = RatK(T ** 2 + T, T + 2)
    assert rat_vpi(x, pi_t) == 1
    assert rat_vpi(RatK.one(f3) / T, pi_t) == -1
    assert rat_vpi(RatK.zero(f3), pi_t) == INFINITY


def test_rat_canonical(f3, T):
    # T / 2T reduces to the constant 2 with a monic denominator
    assert RatK(T, T * 2) == RatK.from_int(f3, 2)
    x = RatK(T + 1, T * 2)
    assert x.den.is_monic()
    assert x.to_text() == "(2*T+2)/T"


def test_rat_arithmetic(f3, T):
    x = RatK(T + 1, T)
    y = RatK(PolyA.one(f3), T + 1)
    assert x * y == RatK(PolyA.one(f3), T)
    assert x - x == 0
    assert (x / x).is_integral()
    with pytest.raises(ZeroDivisionError):
        RatK.zero(f3).inverse()


def test_gcd(T):
    a = (T + 1) * (T ** 2 + 1)
    b = (T + 1) * T
    assert poly_gcd(a, b) == T + 1
    g, s, t = poly_xgcd(a, b)
    assert s * a + t * b == g


def test_frobenius_q(T):
    assert (T + 1).frobenius_q() == (T + 1) ** 3


def test_monic_polys(f3):
    polys = list(monic_polys(f3, 2))
    assert len(polys) == 9
    assert all(p.is_monic() and p.degree == 2 for p in polys)


def test_prime(T):
    pi = PrimePi(T ** 2 + 1)
    assert pi.d == 2
    assert pi.norm == 9
    assert pi.to_text() == "T^2+1"


def test_prime_rejects(T):
    with pytest.raises(NotIrreducible):
        PrimePi(T ** 2 + 2)
    with pytest.raises(NotIrreducible):
        PrimePi(T * 2)
    with pytest.raises(NotIrreducible):
        PrimePi(T ** 0)


def test_parse(f3, T):
    assert parse_poly(f3, "T^2+2*T+1") == (T + 1) ** 2
    assert parse_poly(f3, "-1") == PolyA.from_int(f3, 2)
    assert parse_rat(f3, "(T^2+T)/(T+2)") == RatK(T ** 2 + T, T + 2)
    assert parse_rat(f3, "T^-1") == RatK(PolyA.one(f3), T)


def test_parse_rejects(f3):
    with pytest.raises(FormExpressionError):
        parse_poly(f3, "1/T")
    with pytest.raises(FormExpressionError):
        parse_poly(f3, "T +")
    with pytest.raises(FormExpressionError):
        parse_poly(f3, "z")
    with pytest.raises(FormExpressionError):
        parse_poly(f3, "x")


def test_parse_extension(f9):
    z = parse_poly(f9, "z")
    assert z == PolyA.constant(f9, f9.generator)


def test_parse_modulus():
    assert parse_modulus(3, "z^2+1") == (1, 0, 1)
    with pytest.raises(FormExpressionError):
        parse_modulus(3, "T^2+1")


def test_integers_map_into_prime_field(f9):
    assert PolyA(f9, [-1]) == PolyA(f9, [2])
    assert PolyA(f9, [10]).coeffs == (1,)
    assert PolyA(f9, [f9.generator]).coeffs == (f9.generator,)


def test_prime_over_extension(f9):
    t = PolyA.T(f9)
    z = PolyA.constant(f9, f9.generator)
    assert PrimePi(t + z).norm == 9
    # T^2 + 1 = (T - z)(T + z) once z^2 = -1
    with pytest.raises(NotIrreducible):
        PrimePi(t ** 2 + 1)
