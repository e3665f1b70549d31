class InvalidFieldSpec(Exception):
    """Raised when a finite field specification is not an odd prime power with an
    irreducible modulus."""


class NotIrreducible(Exception):
    """Raised when a polynomial used as a prime of A is not monic irreducible."""


class NonUnitSeries(Exception):
    """Raised when inverting a series whose constant term is zero."""


class CompositionNotSupported(Exception):
    """Raised when substituting a series with nonzero constant term."""


class RootObstruction(Exception):
    """Raised when an n-th root is requested with p | n or a constant term other than 1."""


class NotPiIntegral(Exception):
    """Raised when reducing a value with negative pi-adic valuation modulo pi."""


class NotEvenWeight(Exception):
    """Raised when a weight is not divisible by q - 1 where that is required."""


class TypeSupportViolation(Exception):
    """Raised when a form breaks the weight/type congruence or its coefficient support."""


class InsufficientPrecision(Exception):
    """Raised when a series is too short for the requested computation."""


class NotInSpan(Exception):
    """Raised when a series is not a combination of the level one monomials g^i h^j."""


class OddWeightUnsupported(Exception):
    """Raised when an Atkin-Lehner action or trace is requested in odd weight."""


class NotAnEigenform(Exception):
    """Raised when an oldform is not an eigenvector of the Atkin-Lehner involution."""


class PremiseViolated(Exception):
    """Raised when the theta congruence feeding a proof trace does not hold."""


class FormExpressionError(Exception):
    """Raised when a form expression or polynomial text cannot be parsed."""


class UnknownForm(Exception):
    """Raised when a named generator is not known to the form library."""


class UnknownSuite(Exception):
    """Raised when a requested verification suite is not registered."""


class ConfigError(Exception):
    """Raised when a suite or command line configuration is invalid."""
