"""Exception classes for rxscaling."""

from __future__ import annotations

from typing import Any

from ._constants import EXIT_NUMERIC, EXIT_USAGE


class RxScalingError(Exception):
    """Base exception for all rxscaling errors."""

    def __init__(self, message: str) -> None:
        """Initialize the exception with a message.

        Args:
            message: The error message.
        """
        self.message = message
        super().__init__(message)

    def __str__(self) -> str:
        return self.message


class InvalidParameterError(RxScalingError):
    """Raised when an operation's precondition is violated.

    The violated condition is kept on the exception so callers (and the CLI)
    can report it verbatim.
    """

    def __init__(
        self,
        message: str,
        *,
        parameter: str | None = None,
        value: Any | None = None,
        condition: str | None = None,
    ) -> None:
        """Initialize the parameter error.

        Args:
            message: Human-readable error description.
            parameter: Name of the offending parameter.
            value: The rejected value.
            condition: The precondition that failed, e.g. ``"alpha > 2"``.
        """
        if condition is not None and condition not in message:
            message = f"{message} (requires {condition})"
        super().__init__(message)
        self.parameter = parameter
        self.value = value
        self.condition = condition

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}("
            f"message={self.message!r}, "
            f"parameter={self.parameter!r}, "
            f"value={self.value!r})"
        )


class AntennaBudgetError(InvalidParameterError):
    """Raised when ZF-SIC is asked to cancel L >= N_r interferers."""


class InsufficientDataError(InvalidParameterError):
    """Raised when a fit window holds too few points."""


class ConfigFileError(RxScalingError):
    """Raised when a configuration file or grid string cannot be parsed."""

    def __init__(
        self,
        message: str,
        *,
        path: str | None = None,
        line_number: int | None = None,
    ) -> None:
        """Initialize the config error.

        Args:
            message: Human-readable error description.
            path: File the error was found in.
            line_number: 1-based line of the offending entry.
        """
        if path is not None:
            location = path if line_number is None else f"{path}:{line_number}"
            message = f"{location}: {message}"
        super().__init__(message)
        self.path = path
        self.line_number = line_number


class NumericalError(RxScalingError):
    """Base class for numeric failures (quadrature, special functions)."""


class QuadratureError(NumericalError):
    """Raised when adaptive quadrature cannot reach the requested tolerance.

    The best available estimate and its error bound are kept for diagnosis.
    """

    def __init__(
        self,
        message: str,
        *,
        partial_estimate: float | None = None,
        abs_error: float | None = None,
    ) -> None:
        """Initialize the quadrature error.

        Args:
            message: Human-readable error description.
            partial_estimate: Integral estimate at the point of failure.
            abs_error: QUADPACK's absolute error estimate for it.
        """
        super().__init__(message)
        self.partial_estimate = partial_estimate
        self.abs_error = abs_error

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}("
            f"message={self.message!r}, "
            f"partial_estimate={self.partial_estimate!r}, "
            f"abs_error={self.abs_error!r})"
        )


# Mapping of exception classes to CLI exit codes
EXIT_CODE_FOR_EXCEPTION: dict[type[RxScalingError], int] = {
    InvalidParameterError: EXIT_USAGE,
    ConfigFileError: EXIT_USAGE,
    NumericalError: EXIT_NUMERIC,
}


def exit_code_for(exc: RxScalingError) -> int:
    """Resolve the CLI exit code for an exception.

    The most specific registered class in the exception's MRO wins; anything
    unregistered is reported as a numeric failure.

    Args:
        exc: The exception raised by a command.

    Returns:
        The process exit code.
    """
    for cls in type(exc).__mro__:
        code = EXIT_CODE_FOR_EXCEPTION.get(cls)  # type: ignore[arg-type]
        if code is not None:
            return code
    return EXIT_NUMERIC
