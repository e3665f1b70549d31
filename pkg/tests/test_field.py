import pytest

from drinfeld_forms.algebra import FieldSpec, finite_field
from drinfeld_forms.algebra.field import is_irreducible_over_fp
from drinfeld_forms.core.errors import InvalidFieldSpec


def test_prime_field(f3):
    assert f3.q == 3
    assert f3.add(2, 2) == 1
    assert f3.neg(1) == 2
    assert f3.elem_text(2) == "2"


def test_from_order_prime_power():
    spec = FieldSpec.from_order(9)
    assert (spec.p, spec.r, spec.q) == (3, 2, 9)
    assert len(spec.modulus) == 3
    assert spec.modulus[-1] == 1


def test_from_order_rejects():
    with pytest.raises(InvalidFieldSpec):
        FieldSpec.from_order(6)
    with pytest.raises(InvalidFieldSpec):
        FieldSpec.from_order(9, r=1)
    with pytest.raises(InvalidFieldSpec):
        FieldSpec.from_order(8)


def test_even_characteristic_rejected():
    with pytest.raises(InvalidFieldSpec):
        FieldSpec(2)


def test_reducible_modulus_rejected():
    # z^2 - 1 = (z - 1)(z + 1)
    with pytest.raises(InvalidFieldSpec):
        FieldSpec(3, 2, (2, 0, 1))


def test_modulus_needs_extension():
    with pytest.raises(InvalidFieldSpec):
        FieldSpec(3, 1, (1, 0, 1))


def test_extension_field_is_a_field(f9):
    for a in range(1, 9):
        assert f9.mul(a, f9.inv(a)) == 1
    # the multiplicative group has order 8
    assert f9.pow(f9.generator, 8) == 1


def test_extension_text(f9):
    assert f9.elem_text(f9.generator) == "(z)"
    assert f9.elem_text(1) == "1"


def test_frobenius_fixes_prime_field(f9):
    for a in range(3):
        assert f9.frobenius(a) == a
    assert f9.frobenius(f9.generator) != f9.generator


def test_shared_instance():
    assert finite_field(FieldSpec(5)) is finite_field(FieldSpec(5))


def test_zero_has_no_inverse(f3):
    with pytest.raises(ZeroDivisionError):
        f3.inv(0)


def test_extension_multiplication_reduces_by_modulus(f9):
    """z^2 = -1 in F_3[z]/(z^2 + 1)"""
    z = f9.generator
    assert f9.spec.modulus == (1, 0, 1)
    assert f9.mul(z, z) == f9.neg(1)
    assert f9.digits(f9.mul(z, f9.add(z, 1))) == (2, 1)


def test_larger_extension_builds():
    f25 = finite_field(FieldSpec.from_order(25))
    assert f25.q == 25
    assert all(f25.mul(a, f25.inv(a)) == 1 for a in range(1, 25))
    assert f25.pow(f25.generator, 24) == 1


def test_irreducibility_over_fp():
    assert is_irreducible_over_fp((2, 1, 1), 3)
    # z^2 + z + 1 = (z - 1)^2
    assert not is_irreducible_over_fp((1, 1, 1), 3)
    assert not is_irreducible_over_fp((1, 1, 2), 3)
    assert is_irreducible_over_fp((3, 1), 5)
