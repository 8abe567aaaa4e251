"""Exception hierarchy for relational qubit communication."""

from __future__ import annotations

from typing import Any


class RelFrameError(Exception):
    """Base exception for all library errors."""

    def __init__(
        self,
        message: str,
        *,
        code: str | None = None,
        details: dict[str, Any] | None = None,
        cause: Exception | None = None,
    ) -> None:
        super().__init__(message)
        self.message = message
        self.code = code or self.__class__.__name__
        self.details = details or {}
        self.cause = cause

    def __str__(self) -> str:
        if self.details:
            return f"[{self.code}] {self.message} - Details: {self.details}"
        return f"[{self.code}] {self.message}"

    def to_dict(self) -> dict[str, Any]:
        """Convert exception to dictionary for serialization."""
        return {
            "error": {
                "code": self.code,
                "message": self.message,
                "details": self.details,
                "type": self.__class__.__name__,
            }
        }


# Input Errors
class InvalidInputError(RelFrameError):
    """A value is outside the domain an operation accepts."""

    pass


class OutOfRangeError(InvalidInputError):
    """A parameter lies outside its closed range."""

    def __init__(
        self,
        name: str,
        value: float,
        lo: float,
        hi: float,
        *,
        cause: Exception | None = None,
    ) -> None:
        super().__init__(
            f"{name}={value!r} is outside [{lo!r}, {hi!r}]",
            details={"parameter": name, "value": value, "range": [lo, hi]},
            cause=cause,
        )


class InvalidConfigurationError(RelFrameError):
    """A request combines otherwise valid values inconsistently."""

    pass


# Numerical Errors
class NumericalDomainError(RelFrameError):
    """Arithmetic left the domain where it is defined."""

    pass


class ImpossibleOutcomeError(NumericalDomainError):
    """A measurement outcome has zero marginal probability."""

    pass
