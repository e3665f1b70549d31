from .base import BaseSuite, CheckResult, SuiteGuard, SuiteResult

__all__ = [
    'BaseSuite',
    'CheckResult',
    'SuiteGuard',
    'SuiteResult',
]
