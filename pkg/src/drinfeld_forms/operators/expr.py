""" drinfeld_forms/operators/expr.py

Form expressions such as "delta + T^4*iota(delta)" or "Estar*g1^3".
"""

from ..algebra import PolyA
from ..algebra.text import Evaluator, ExpressionParser
from ..core.errors import FormExpressionError, TypeSupportViolation, UnknownForm
from .oldforms import OldformAlgebra, OldPoly


class FormEvaluator(Evaluator):
    """Leaves are integers of F_p, T, z, pi and the generator names"""

    def __init__(self, algebra: OldformAlgebra):
        self.algebra = algebra

    def number(self, value: int) -> OldPoly:
        return self.algebra.constant(value)

    def name(self, name: str) -> OldPoly:
        field = self.algebra.field
        if name == 'T':
            return self.algebra.constant(PolyA.T(field))
        if name == 'pi':
            return self.algebra.constant(self.algebra.pi.pi)
        if name == 'z':
            if field.r == 1:
                raise FormExpressionError("The generator z only exists when r > 1")
            return self.algebra.constant(PolyA.constant(field, field.generator))
        try:
            return self.algebra.generator(name)
        except UnknownForm as error:
            raise FormExpressionError(str(error)) from error

    def call(self, name: str, argument: OldPoly) -> OldPoly:
        if name == 'iota':
            return argument.iota()
        raise FormExpressionError(f"Unknown function {name}(), only iota() is defined")


def parse_form(algebra: OldformAlgebra, text: str) -> OldPoly:
    """Parses a form expression into the oldform algebra of the given prime"""
    try:
        value = ExpressionParser(FormEvaluator(algebra)).parse(text)
    except TypeSupportViolation as error:
        raise FormExpressionError(f"{text!r} is not homogeneous: {error}") from error
    if not isinstance(value, OldPoly):  # pragma: no cover
        raise FormExpressionError(f"{text!r} is not a form expression")
    return value
