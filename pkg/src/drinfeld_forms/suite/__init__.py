from importlib import import_module
from inspect import isclass
from multiprocessing import Pool
from pathlib import Path
from pkgutil import iter_modules
from typing import Dict, List, Optional, Sequence, Tuple, Type

from ..core.config import SuiteConfig
from ..core.errors import UnknownSuite
from ..core.logging import logger
from ..forms import FormLibrary
from .base import BaseSuite, CheckResult, SuiteResult

ALL = 'all'

SUITES: Dict[str, Type[BaseSuite]] = {}

package_dir = Path(__file__).resolve().parent
for (_, module_name, _) in iter_modules([str(package_dir)]):  # type: ignore
    module = import_module(f"{__name__}.{module_name}")
    for attribute_name in dir(module):

        attribute = getattr(module, attribute_name)
        if isclass(attribute) and issubclass(attribute, BaseSuite) and attribute is not BaseSuite:
            if attribute_name not in globals():
                globals()[attribute_name] = attribute
            SUITES[attribute.shortname] = attribute


def suite_ids(requested: Sequence[str]) -> List[str]:
    """Expands 'all' and validates the names, in id order"""
    ids = set()
    for name in requested:
        if name == ALL:
            ids.update(SUITES)
        elif name in SUITES:
            ids.add(name)
        else:
            raise UnknownSuite(f"Unknown suite {name!r}, expected one of "
                               f"{', '.join(sorted(SUITES))} or {ALL}")
    return sorted(ids)


def _run_one(payload: Tuple[str, SuiteConfig]) -> SuiteResult:
    suite_id, config = payload
    return SUITES[suite_id](config).run()


def _merge(results: List[SuiteResult]) -> SuiteResult:
    checks = []
    for result in results:
        for check in result.checks:
            check.check = f"{result.suite}/{check.check}"
            checks.append(check)
    config = results[0].config if results else {}
    return SuiteResult(ALL, config, checks, sum(r.wall_time for r in results))


def run_suites(requested: Sequence[str], config: SuiteConfig,
               library: Optional[FormLibrary] = None) -> List[SuiteResult]:
    """Runs suites, serially with one shared library or across config.jobs
    worker processes.  The order of the results is the suite id order."""
    ids = suite_ids(requested)
    if config.jobs > 1 and len(ids) > 1:
        logger.info(f"Running {len(ids)} suites on {config.jobs} workers")
        with Pool(processes=min(config.jobs, len(ids))) as pool:
            results = pool.map(_run_one, [(suite_id, config) for suite_id in ids])
    else:
        library = library if library is not None else FormLibrary(config.field, config.prec)
        results = [SUITES[suite_id](config, library).run() for suite_id in ids]
    return sorted(results, key=lambda r: r.suite)


def run_suite(suite_id: str, config: SuiteConfig,
              library: Optional[FormLibrary] = None) -> SuiteResult:
    """One suite's result, or the merged result of every suite for 'all'"""
    results = run_suites([suite_id], config, library)
    if suite_id == ALL:
        return _merge(results)
    return results[0]


__all__ = [
    'ALL',
    'SUITES',
    'BaseSuite',
    'CheckResult',
    'SuiteResult',
    'run_suite',
    'run_suites',
    'suite_ids',
]
