"""Domain layer exceptions."""


class PadicDSException(Exception):
    """Base exception for the padic-ds toolkit."""

    pass


class InvalidInputException(PadicDSException):
    """Raised when an integer argument is outside the operation's domain."""

    pass


class NotPAdicIntegerException(PadicDSException):
    """Raised when a rational has p in its denominator but a p-adic integer is required."""

    pass


class InvalidRadiusException(PadicDSException):
    """Raised when a ball radius is negative."""

    pass


class NotInvertibleException(PadicDSException):
    """Raised when an integer has no inverse modulo a prime power."""

    pass


class DegenerateBallException(PadicDSException):
    """Raised when a residue-class operation receives an empty or singleton ball."""

    pass


class NotAUnitBallException(PadicDSException):
    """Raised when a ball meets pZ_p but must lie in the unit group."""

    pass


class NotAUnitException(PadicDSException):
    """Raised when a digit vector does not represent a p-adic unit."""

    pass


class SearchCapExceededException(PadicDSException):
    """Raised when a prime search runs past its cap."""

    pass


class PrimeMismatchException(PadicDSException):
    """Raised when two ball sets over different primes are combined."""

    pass


class InvalidDigitsException(PadicDSException):
    """Raised when a digit sequence does not fit the construction."""

    pass


class OutOfRangeException(PadicDSException):
    """Raised when a target measure lies outside [0, 1]."""

    pass


class RepresentsOneException(PadicDSException):
    """Raised when a digit expansion stands for 1, which has no schedule."""

    pass


class PreconditionFailedException(PadicDSException):
    """Raised when a check is not applicable to its parameters."""

    pass


class InvalidResidueException(PadicDSException):
    """Raised when a residue shares a factor with p."""

    pass


class ConfigurationException(PadicDSException):
    """Raised when command-line or environment configuration is invalid."""

    pass


class ReportWriteException(PadicDSException):
    """Raised when a report cannot be rendered or written."""

    pass
