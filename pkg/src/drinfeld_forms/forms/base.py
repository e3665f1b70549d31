""" drinfeld_forms/forms/base.py

Forms as u-series tagged with weight, type and level.
"""

from dataclasses import dataclass, field as dataclass_field
from typing import Any, Dict, Optional

from ..algebra import FiniteField, PrimePi, RatK, USeries
from ..core.errors import TypeSupportViolation


@dataclass(frozen=True)
class Level:
    """Either level one or Gamma_0(pi) for a single prime pi"""

    pi: Optional[PrimePi] = None

    @classmethod
    def one(cls) -> 'Level':
        return cls(None)

    @classmethod
    def at(cls, pi: PrimePi) -> 'Level':
        return cls(pi)

    @property
    def is_one(self) -> bool:
        return self.pi is None

    @property
    def tag(self) -> str:
        return "one" if self.pi is None else f"pi({self.pi.to_text()})"

    def join(self, other: 'Level') -> 'Level':
        """Level of a product"""
        if self.pi is None:
            return other
        if other.pi is not None and other.pi != self.pi:
            raise ValueError(f"Cannot combine levels {self.tag} and {other.tag}")
        return self


@dataclass(frozen=True)
class SeriesForm:
    """A u-series with weight k, type l modulo q - 1 and a level.

    Construction enforces k = 2l (mod q - 1) and the type support rule
    a(i) = 0 unless i = l (mod q - 1)."""

    series: USeries
    weight: int
    type: int
    level: Level = dataclass_field(default_factory=Level.one)
    name: str = ""

    def __post_init__(self):
        q = self.series.field.q
        object.__setattr__(self, 'type', self.type % (q - 1))
        if self.weight < 0:
            raise TypeSupportViolation(f"Negative weight {self.weight}")
        if (self.weight - 2 * self.type) % (q - 1):
            raise TypeSupportViolation(
                f"Weight {self.weight} and type {self.type} violate k = 2l (mod {q - 1})")
        for i, c in enumerate(self.series.coeffs):
            if c.num.coeffs and (i - self.type) % (q - 1):
                raise TypeSupportViolation(
                    f"{self.name or 'form'} has a nonzero u^{i} coefficient but type {self.type}")

    @property
    def field(self) -> FiniteField:
        return self.series.field

    @property
    def prec(self) -> int:
        return self.series.prec

    def truncate(self, prec: int) -> 'SeriesForm':
        return SeriesForm(self.series.truncate(prec), self.weight, self.type, self.level, self.name)

    def rename(self, name: str) -> 'SeriesForm':
        return SeriesForm(self.series, self.weight, self.type, self.level, name)

    def __mul__(self, other):
        if isinstance(other, SeriesForm):
            name = f"{self.name}*{other.name}" if self.name and other.name else ""
            return SeriesForm(self.series * other.series, self.weight + other.weight,
                              self.type + other.type, self.level.join(other.level), name)
        if isinstance(other, (RatK, int)):
            return SeriesForm(self.series.scale(other), self.weight, self.type, self.level)
        return NotImplemented

    __rmul__ = __mul__

    def _same_space(self, other: 'SeriesForm'):
        if (self.weight, self.type) != (other.weight, other.type):
            raise TypeSupportViolation(
                f"Cannot add weight/type ({self.weight},{self.type}) "
                f"to ({other.weight},{other.type})")

    def __add__(self, other: 'SeriesForm') -> 'SeriesForm':
        self._same_space(other)
        return SeriesForm(self.series + other.series, self.weight, self.type,
                          self.level.join(other.level))

    def __sub__(self, other: 'SeriesForm') -> 'SeriesForm':
        self._same_space(other)
        return SeriesForm(self.series - other.series, self.weight, self.type,
                          self.level.join(other.level))

    def __neg__(self) -> 'SeriesForm':
        return SeriesForm(-self.series, self.weight, self.type, self.level, self.name)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'form': self.name,
            'weight': self.weight,
            'type': self.type,
            'level': self.level.tag,
            'prec': self.prec,
            'coeffs': self.series.to_texts(),
        }
