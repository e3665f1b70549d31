import hashlib
import inspect
import time
from typing import Any, Callable, Dict, List, Optional, Tuple

from ...core.config import SuiteConfig
from ...core.encoders import JSONSerializable, dumps
from ...core.logging import logger
from ...core.version import version_number
from ...forms import FormLibrary
from ...operators import CongruenceReport, OldformAlgebra

CHECK_PREFIX = 'check_'


class SuiteGuard(type):

    __SENTINEL = object()

    def __new__(mcs, name, bases, class_dict):
        private = {key for base in bases for key, value in vars(
            base).items() if callable(value) and mcs.__is_final(value)}
        if any(key in private for key in class_dict):
            raise TypeError('Cannot override final method')
        return super().__new__(mcs, name, bases, class_dict)

    @classmethod
    def __is_final(mcs, method):
        try:
            return method.__final is mcs.__SENTINEL
        except AttributeError:
            return False

    @classmethod
    def final(mcs, method):
        """Marks a method as final, preventing it from being overridden in subclasses"""
        method.__final = mcs.__SENTINEL
        return method


class CheckResult(JSONSerializable):
    """The verdict of one check.  A failing congruence contributes the first
    offending u-exponent and coefficient."""

    def __init__(self, passed: bool, detail: str = "",
                 reports: Optional[List[CongruenceReport]] = None,
                 values: Optional[Dict[str, Any]] = None):
        self.check = ""
        self.passed = bool(passed)
        self.detail = detail
        self.reports = list(reports or [])
        self.values = dict(values or {})
        self.witness: Optional[int] = None
        self.coefficient: Optional[str] = None
        self._elapsed = 0.0
        for report in self.reports:
            if not report and report.witness is not None:
                self.witness = report.witness
                self.coefficient = report.coefficient
                break

    @classmethod
    def from_reports(cls, *reports: CongruenceReport, detail: str = "",
                     values: Optional[Dict[str, Any]] = None) -> 'CheckResult':
        return cls(all(bool(r) for r in reports), detail, list(reports), values)

    @property
    def elapsed(self) -> float:
        return self._elapsed

    def __repr__(self):
        return f"CheckResult({self.check}: {'pass' if self.passed else 'fail'})"


class SuiteResult(JSONSerializable):
    """All check results of one suite at one configuration.

    Wall time is kept out of the JSON so repeated runs are byte-identical."""

    def __init__(self, suite: str, config: Dict[str, Any], checks: List[CheckResult],
                 wall_time: float = 0.0):
        self.suite = suite
        self.config = config
        self.checks = sorted(checks, key=lambda c: c.check)
        self.passed = all(c.passed for c in self.checks)
        self.version = version_number
        self.hash = self.reproducibility_hash()
        self._wall_time = wall_time

    @property
    def wall_time(self) -> float:
        return self._wall_time

    def reproducibility_hash(self) -> str:
        """SHA-256 of everything the suite emitted except timings"""
        payload = {
            'suite': self.suite,
            'config': self.config,
            'checks': [c.to_dict() for c in self.checks],
        }
        hasher = hashlib.sha256()
        hasher.update(dumps(payload, indent=None).encode())
        return hasher.hexdigest()

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]


class BaseSuite(metaclass=SuiteGuard):
    """Base class for all verification suites.

    Every method named check_<id> is a check.  It returns a CheckResult and
    is run in id order; an exception inside a check fails that check only.
    """

    shortname = 'base'
    description = ''

    def __init__(self, config: SuiteConfig, library: Optional[FormLibrary] = None):
        self.config = config
        self.field = config.field
        self.pi = config.prime
        self.prec = config.prec
        self.library = library if library is not None else FormLibrary(self.field, config.prec)
        self.algebra = OldformAlgebra(self.library, self.pi)

    def __repr__(self):
        return f"{self.__class__.__name__}({self.config.describe()})"

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def norm(self) -> int:
        return self.pi.norm

    @SuiteGuard.final
    def checks(self) -> List[Tuple[str, Callable[[], CheckResult]]]:
        """The (id, method) pairs of this suite, sorted by id"""
        found = [(name[len(CHECK_PREFIX):], method)
                 for name, method in inspect.getmembers(self, inspect.ismethod)
                 if name.startswith(CHECK_PREFIX)]
        return sorted(found, key=lambda item: item[0])

    @SuiteGuard.final
    def run_check(self, check_id: str, method: Callable[[], CheckResult]) -> CheckResult:
        start = time.perf_counter()
        try:
            result = method()
        except Exception as error:  # pylint: disable=broad-except
            logger.warning(f"{self.shortname}/{check_id} raised {error.__class__.__name__}: {error}")
            result = CheckResult(False, f"{check_id}: {error.__class__.__name__}: {error}")
        result.check = check_id
        result._elapsed = time.perf_counter() - start  # pylint: disable=protected-access
        if result.passed:
            logger.info(f"{self.shortname}/{check_id} passed in {result.elapsed:.2f}s")
        else:
            logger.warning(f"{self.shortname}/{check_id} failed: {result.detail or 'see reports'}")
        return result

    @SuiteGuard.final
    def run(self) -> SuiteResult:
        """Runs every check and collates the results"""
        logger.info(f"Starting suite {self.shortname} at q={self.q}, pi={self.pi.to_text()}, "
                    f"N={self.prec}")
        start = time.perf_counter()
        results = [self.run_check(check_id, method) for check_id, method in self.checks()]
        return SuiteResult(self.shortname, self.config.describe(), results,
                           time.perf_counter() - start)
