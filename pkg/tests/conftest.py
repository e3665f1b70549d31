import pytest

from drinfeld_forms.algebra import FieldSpec, PolyA, PrimePi, finite_field
from drinfeld_forms.forms import FormLibrary
from drinfeld_forms.operators import OldformAlgebra


@pytest.fixture(scope='session')
def f3():
    return finite_field(FieldSpec(3))


@pytest.fixture(scope='session')
def f5():
    return finite_field(FieldSpec(5))


@pytest.fixture(scope='session')
def f9():
    return finite_field(FieldSpec.from_order(9))


@pytest.fixture(scope='session')
def T(f3):  # pylint: disable=invalid-name
    return PolyA.T(f3)


@pytest.fixture(scope='session')
def pi_t(T):
    return PrimePi(T)


@pytest.fixture(scope='session')
def pi_t1(T):
    return PrimePi(T + 1)


@pytest.fixture(scope='session')
def pi_t2(T):
    return PrimePi(T ** 2 + 1)


@pytest.fixture(scope='session')
def library(f3):
    """Generators over F_3 to O(u^60), shared across the session"""
    return FormLibrary(f3, 60)


@pytest.fixture(scope='session')
def algebra(library, pi_t):
    return OldformAlgebra(library, pi_t)
