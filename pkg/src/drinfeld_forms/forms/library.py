""" drinfeld_forms/forms/library.py

A shared memo of generator expansions for one field.  Entries are stored at
the highest precision requested so far and truncated on the way out.
"""

from threading import RLock
from typing import Callable, Dict, Optional, Tuple

from ..algebra import FiniteField, PrimePi, USeries
from ..core.errors import UnknownForm
from ..core.logging import logger
from .base import Level, SeriesForm
from .generators import (delta_series, e_series, e_star_series, eisenstein_tilde,
                         g1_series, gd_series, h_series)

GENERATOR_NAMES = ('g1', 'h', 'delta', 'gd', 'E', 'Estar')

Key = Tuple[str, Optional[PrimePi]]


class FormLibrary:
    """Generator forms of one field, cached per (name, pi) with reuse by truncation.

    Values handed out are immutable, so readers on several threads only
    contend on the lock while an entry is being built."""

    def __init__(self, field: FiniteField, prec: int = 365):
        self.field = field
        self.prec = prec
        self._lock = RLock()
        self._forms: Dict[Key, SeriesForm] = {}
        self._powers: Dict[Tuple[Key, int], USeries] = {}

    def __repr__(self):
        return f"FormLibrary({self.field!r}, prec={self.prec})"

    def _lookup(self, key: Key, prec: Optional[int],
                build: Callable[[int], SeriesForm]) -> SeriesForm:
        prec = self.prec if prec is None else prec
        with self._lock:
            cached = self._forms.get(key)
            if cached is not None and cached.prec >= prec:
                return cached if cached.prec == prec else cached.truncate(prec)
            logger.debug(f"Building {key[0]} to O(u^{prec})")
            value = build(prec)
            self._forms[key] = value
            return value

    def g1(self, prec: Optional[int] = None) -> SeriesForm:
        return self._lookup(('g1', None), prec, lambda n: g1_series(self.field, n))

    def gd(self, pi: PrimePi, prec: Optional[int] = None) -> SeriesForm:
        if pi.d == 1:
            return self.g1(prec).rename('gd')
        return self._lookup(('gd', pi), prec, lambda n: gd_series(pi, n).rename('gd'))

    def delta(self, prec: Optional[int] = None) -> SeriesForm:
        return self._lookup(('delta', None), prec,
                            lambda n: delta_series(self.field, n, self.g1(n)))

    def h(self, prec: Optional[int] = None) -> SeriesForm:
        q = self.field.q

        def build(n: int) -> SeriesForm:
            return h_series(self.field, n, self.delta(n + q - 2))

        return self._lookup(('h', None), prec, build)

    def e(self, prec: Optional[int] = None) -> SeriesForm:
        """E as a weight 2, type 1 series; it is not modular"""
        return self._lookup(('E', None), prec,
                            lambda n: SeriesForm(e_series(self.field, n), 2, 1, Level.one(), 'E'))

    def e_star(self, pi: PrimePi, prec: Optional[int] = None) -> SeriesForm:
        return self._lookup(('Estar', pi), prec,
                            lambda n: e_star_series(pi, n, self.e(n).series))

    def eisenstein(self, k: int, prec: Optional[int] = None) -> USeries:
        return eisenstein_tilde(self.field, k, self.prec if prec is None else prec)

    def form(self, name: str, pi: Optional[PrimePi] = None,
             prec: Optional[int] = None) -> SeriesForm:
        """Looks a generator up by name"""
        if name in ('gd', 'Estar') and pi is None:
            raise UnknownForm(f"{name} needs a prime pi")
        if name == 'g1':
            return self.g1(prec)
        if name == 'h':
            return self.h(prec)
        if name == 'delta':
            return self.delta(prec)
        if name == 'gd':
            return self.gd(pi, prec)  # type: ignore[arg-type]
        if name == 'E':
            return self.e(prec)
        if name == 'Estar':
            return self.e_star(pi, prec)  # type: ignore[arg-type]
        raise UnknownForm(f"Unknown form {name!r}, expected one of {', '.join(GENERATOR_NAMES)}")

    def power(self, name: str, exponent: int, pi: Optional[PrimePi] = None,
              prec: Optional[int] = None) -> USeries:
        """The series of a generator raised to a power.

        The exponent is split into base-q digits: f^{q^m} comes from the
        q-power map and only the digits cost multiplications."""
        prec = self.prec if prec is None else prec
        key = ((name, pi), exponent)
        with self._lock:
            cached = self._powers.get(key)
            if cached is not None and cached.prec >= prec:
                return cached.truncate(prec)
        base = self.form(name, pi, prec).series
        q = self.field.q
        result = USeries.constant(self.field, 1, prec)
        current = base
        e = exponent
        while e:
            digit = e % q
            for _ in range(digit):
                result = (result * current).truncate(prec)
            e //= q
            if e:
                current = current.frobenius_q(prec)
        with self._lock:
            self._powers[key] = result
        return result

    def monomial(self, i: int, j: int, prec: Optional[int] = None) -> USeries:
        """g1^i h^j"""
        prec = self.prec if prec is None else prec
        left = self.power('g1', i, prec=prec)
        right = self.power('h', j, prec=prec)
        return (left * right).truncate(prec)

    def clear(self):
        with self._lock:
            self._forms.clear()
            self._powers.clear()
