"""
Exception hierarchy for pairsuite.

Every error carries the exit code the command-line front end reports for it:
3 for guard violations (search spaces too large to enumerate), 4 for domain
errors (arguments outside the mathematical domain of an operation).
"""


class PairSuiteError(Exception):
    """Base class for all pairsuite errors."""

    exit_code = 4


class DomainError(PairSuiteError, ValueError):
    """Argument outside the domain of the operation."""


class ParameterError(DomainError):
    """Code or decoder parameters are inconsistent."""


class NonPrimeCharacteristic(DomainError):
    """Field characteristic is not prime."""


class OrderTooLarge(DomainError):
    """Field order exceeds the supported maximum."""


class FieldMismatch(DomainError):
    """Operands live in different fields."""


class DivisionByZero(PairSuiteError, ZeroDivisionError):
    """Inverse of the zero element requested."""


class ReducibleModulus(DomainError):
    """Extension modulus is reducible (the primitive element is not primitive)."""


class LengthTooShort(DomainError):
    """Word length below 2, where pair reads degenerate."""


class LengthMismatch(DomainError):
    """Words of different lengths compared."""


class DegreeTooLarge(DomainError):
    """Message polynomial degree exceeds k - 1."""


class RadiusNonpositive(DomainError):
    """Decoding radius is zero or negative."""


class NoSolution(DomainError):
    """Inversion target lies outside the attainable range."""


class SearchSpaceTooLarge(PairSuiteError, ValueError):
    """Exhaustive enumeration would exceed the configured guard."""

    exit_code = 3


class SizeTooLarge(PairSuiteError, ValueError):
    """Requested object (e.g. random code) exceeds the configured guard."""

    exit_code = 3


class VerificationFailed(PairSuiteError):
    """An oracle cross-check disagreed with the closed form."""

    exit_code = 1
