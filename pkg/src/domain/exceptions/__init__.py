"""Domain exceptions."""

from .domain_exceptions import (
    ConfigurationException,
    DegenerateBallException,
    InvalidDigitsException,
    InvalidInputException,
    InvalidRadiusException,
    InvalidResidueException,
    NotAUnitBallException,
    NotAUnitException,
    NotInvertibleException,
    NotPAdicIntegerException,
    OutOfRangeException,
    PadicDSException,
    PreconditionFailedException,
    PrimeMismatchException,
    ReportWriteException,
    RepresentsOneException,
    SearchCapExceededException,
)

__all__ = [
    "ConfigurationException",
    "DegenerateBallException",
    "InvalidDigitsException",
    "InvalidInputException",
    "InvalidRadiusException",
    "InvalidResidueException",
    "NotAUnitBallException",
    "NotAUnitException",
    "NotInvertibleException",
    "NotPAdicIntegerException",
    "OutOfRangeException",
    "PadicDSException",
    "PreconditionFailedException",
    "PrimeMismatchException",
    "ReportWriteException",
    "RepresentsOneException",
    "SearchCapExceededException",
]
