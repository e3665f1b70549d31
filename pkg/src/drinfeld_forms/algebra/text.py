""" drinfeld_forms/algebra/text.py

Parsing of the canonical text forms.  A small recursive-descent parser reads
sums, products, quotients, integer powers and function calls; an evaluator
object decides what names, numbers and calls mean, so the same grammar serves
elements of K here and oldform expressions in the operators package.
"""

import re
from typing import Any, List, Optional, Tuple

from ..core.errors import FormExpressionError
from .field import FieldSpec, FiniteField, finite_field
from .poly import PolyA, RatK

TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def tokenize(text: str) -> List[Tuple[str, str]]:
    tokens = []
    position = 0
    text = text.strip()
    while position < len(text):
        match = TOKEN.match(text, position)
        if match is None:  # pragma: no cover
            break
        number, name, symbol = match.groups()
        if number is not None:
            tokens.append(('num', number))
        elif name is not None:
            tokens.append(('name', name))
        elif symbol in '+-*/^()·':
            tokens.append(('op', '*' if symbol == '·' else symbol))
        else:
            raise FormExpressionError(f"Unexpected character {symbol!r} in {text!r}")
        position = match.end()
    return tokens


class Evaluator:
    """Gives meaning to the leaves of an expression"""

    def number(self, value: int) -> Any:
        raise NotImplementedError

    def name(self, name: str) -> Any:
        raise NotImplementedError

    def call(self, name: str, argument: Any) -> Any:
        raise FormExpressionError(f"Unknown function {name}()")


class ExpressionParser:
    """expr := term (('+'|'-') term)* ; term := unary (('*'|'/') unary)* ;
    unary := ('-'|'+') unary | power ; power := atom ('^' ['-'] NUM)? ;
    atom := NUM | NAME | NAME '(' expr ')' | '(' expr ')'"""

    def __init__(self, evaluator: Evaluator):
        self.evaluator = evaluator
        self.tokens: List[Tuple[str, str]] = []
        self.index = 0
        self.text = ""

    def parse(self, text: str) -> Any:
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0
        if not self.tokens:
            raise FormExpressionError("Empty expression")
        value = self._expr()
        if self.index != len(self.tokens):
            raise FormExpressionError(
                f"Unexpected token {self.tokens[self.index][1]!r} in {text!r}")
        return value

    def _peek(self) -> Optional[Tuple[str, str]]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _take(self, kind: str, value: Optional[str] = None) -> str:
        token = self._peek()
        if token is None or token[0] != kind or (value is not None and token[1] != value):
            expected = value or kind
            raise FormExpressionError(f"Expected {expected} in {self.text!r}")
        self.index += 1
        return token[1]

    def _accept(self, value: str) -> bool:
        token = self._peek()
        if token is not None and token == ('op', value):
            self.index += 1
            return True
        return False

    def _expr(self) -> Any:
        value = self._term()
        while True:
            if self._accept('+'):
                value = value + self._term()
            elif self._accept('-'):
                value = value - self._term()
            else:
                return value

    def _term(self) -> Any:
        value = self._unary()
        while True:
            if self._accept('*'):
                value = value * self._unary()
            elif self._accept('/'):
                value = value / self._unary()
            else:
                return value

    def _unary(self) -> Any:
        if self._accept('-'):
            return -self._unary()
        if self._accept('+'):
            return self._unary()
        return self._power()

    def _power(self) -> Any:
        value = self._atom()
        if self._accept('^'):
            negative = self._accept('-')
            exponent = int(self._take('num'))
            value = value ** (-exponent if negative else exponent)
        return value

    def _atom(self) -> Any:
        token = self._peek()
        if token is None:
            raise FormExpressionError(f"Unexpected end of {self.text!r}")
        kind, value = token
        if kind == 'num':
            self.index += 1
            return self.evaluator.number(int(value))
        if kind == 'name':
            self.index += 1
            if self._accept('('):
                argument = self._expr()
                self._take('op', ')')
                return self.evaluator.call(value, argument)
            return self.evaluator.name(value)
        if self._accept('('):
            inner = self._expr()
            self._take('op', ')')
            return inner
        raise FormExpressionError(f"Unexpected token {value!r} in {self.text!r}")


class RationalEvaluator(Evaluator):
    """Leaves of K: integers of F_p, the variable T and the F_q generator z"""

    def __init__(self, field: FiniteField):
        self.field = field

    def number(self, value: int) -> RatK:
        return RatK.from_int(self.field, value)

    def name(self, name: str) -> RatK:
        if name == 'T':
            return RatK.coerce(self.field, PolyA.T(self.field))
        if name == 'z':
            if self.field.r == 1:
                raise FormExpressionError("The generator z only exists when r > 1")
            return RatK.coerce(self.field, PolyA.constant(self.field, self.field.generator))
        raise FormExpressionError(f"Unknown symbol {name!r}")


def parse_rat(field: FiniteField, text: str) -> RatK:
    value = ExpressionParser(RationalEvaluator(field)).parse(text)
    return RatK.coerce(field, value)


def parse_poly(field: FiniteField, text: str) -> PolyA:
    value = parse_rat(field, text)
    if not value.is_integral():
        raise FormExpressionError(f"{text!r} is not a polynomial")
    return value.num


def parse_modulus(p: int, text: str) -> Tuple[int, ...]:
    """Reads a polynomial in z over F_p such as "z^2+1" into low-to-high coefficients"""
    prime_field = finite_field(FieldSpec(p=p))

    class _ModulusEvaluator(RationalEvaluator):
        def name(self, name: str) -> RatK:
            if name == 'z':
                return RatK.coerce(self.field, PolyA.T(self.field))
            raise FormExpressionError(f"Unknown symbol {name!r} in modulus")

    value = RatK.coerce(prime_field, ExpressionParser(_ModulusEvaluator(prime_field)).parse(text))
    if not value.is_integral():
        raise FormExpressionError(f"{text!r} is not a polynomial")
    return value.num.coeffs
