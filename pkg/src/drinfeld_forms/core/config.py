""" drinfeld_forms/core/config.py

Run configuration for the verification suites.  Command line flags win,
environment variables (optionally loaded from a .env file) fill the gaps.
"""

import os
from argparse import Namespace
from dataclasses import dataclass, field as dataclass_field, replace
from functools import cached_property
from typing import Any, Dict, List, Optional, Tuple

from ..algebra import FieldSpec, FiniteField, PrimePi, finite_field, parse_modulus, parse_poly
from .errors import ConfigError, FormExpressionError, InvalidFieldSpec, NotIrreducible

ENV_PREFIX = 'DRINFELD_FORMS_'

OUTPUT_FORMATS = ('json', 'table')

# (q, pi, N): d = 1 and d = 2 at q = 3, and a second characteristic
DEFAULT_MATRIX: Tuple[Tuple[int, str, int], ...] = (
    (3, 'T', 365),
    (3, 'T+1', 365),
    (3, 'T^2+1', 365),
    (5, 'T', 130),
)


def _env(name: str) -> Optional[str]:
    value = os.getenv(f"{ENV_PREFIX}{name}")
    return value if value else None


def _as_int(name: str, value: Any) -> Optional[int]:
    if value is None:
        return None
    try:
        return int(value)
    except (TypeError, ValueError) as error:
        raise ConfigError(f"{name} must be an integer, got {value!r}") from error


def apply_environment(args: Namespace) -> Namespace:
    """Fills unset flags from DRINFELD_FORMS_* variables"""
    for flag in ('q', 'r', 'modulus', 'pi', 'prec', 'jobs', 'log_level'):
        if getattr(args, flag, None) is None:
            setattr(args, flag, _env(flag.upper()))
    return args


@dataclass
class SuiteConfig:  # pylint: disable=too-many-instance-attributes
    """Field, prime and precision for one verification run"""

    q: int = 3
    pi: str = 'T'
    prec: int = 365
    r: Optional[int] = None
    modulus: Optional[str] = None
    suites: List[str] = dataclass_field(default_factory=lambda: ['all'])
    out: Optional[str] = None
    format: str = 'json'
    jobs: int = 1
    # Only suite runs need the 4q^2 floor; single expansions may be shorter
    check_prec: bool = True

    def __post_init__(self):
        if self.format not in OUTPUT_FORMATS:
            raise ConfigError(f"Output format must be one of {', '.join(OUTPUT_FORMATS)}, "
                              f"got {self.format!r}")
        if self.jobs < 1:
            raise ConfigError(f"--jobs must be at least 1, got {self.jobs}")
        q = self.spec.q
        if self.prec < 1:
            raise ConfigError(f"Precision must be positive, got {self.prec}")
        if self.check_prec and self.prec < 4 * q * q:
            raise ConfigError(f"Precision {self.prec} is below 4q^2 = {4 * q * q}")
        # Validates pi eagerly
        _ = self.prime

    @cached_property
    def spec(self) -> FieldSpec:
        try:
            modulus = None
            if self.modulus:
                factors = FieldSpec.from_order(self.q, self.r)
                modulus = parse_modulus(factors.p, self.modulus)
            return FieldSpec.from_order(self.q, self.r, modulus)
        except (InvalidFieldSpec, FormExpressionError) as error:
            raise ConfigError(str(error)) from error

    @cached_property
    def field(self) -> FiniteField:
        return finite_field(self.spec)

    @cached_property
    def prime(self) -> PrimePi:
        try:
            return PrimePi(parse_poly(self.field, self.pi))
        except (NotIrreducible, FormExpressionError) as error:
            raise ConfigError(f"pi = {self.pi!r} is not usable: {error}") from error

    def describe(self) -> Dict[str, Any]:
        """The fields that determine a suite's output"""
        return {
            'q': self.spec.q,
            'p': self.spec.p,
            'r': self.spec.r,
            'modulus': list(self.spec.modulus) if self.spec.modulus else None,
            'pi': self.prime.to_text(),
            'prec': self.prec,
        }

    def with_target(self, q: int, pi: str, prec: int) -> 'SuiteConfig':
        return replace(self, q=q, pi=pi, prec=prec, r=None, modulus=None)

    def matrix(self) -> List['SuiteConfig']:
        """This configuration moved across the default (q, pi, N) matrix"""
        return [self.with_target(q, pi, prec) for q, pi, prec in DEFAULT_MATRIX]

    @classmethod
    def from_args(cls, args: Namespace, check_prec: bool = True) -> 'SuiteConfig':
        """Builds a config from parsed flags that apply_environment has filled"""
        kwargs: Dict[str, Any] = {'check_prec': check_prec}
        for name in ('q', 'r', 'prec', 'jobs'):
            value = _as_int(f"--{name}", getattr(args, name, None))
            if value is not None:
                kwargs[name] = value
        for name in ('pi', 'modulus', 'out', 'format'):
            value = getattr(args, name, None)
            if value is not None:
                kwargs[name] = value
        suites = getattr(args, 'suite', None)
        if suites:
            kwargs['suites'] = list(suites)
        return cls(**kwargs)
