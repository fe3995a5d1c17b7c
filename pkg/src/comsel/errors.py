"""Shared exception types."""

from __future__ import annotations


class ComselError(Exception):
    """Base class for errors raised by this package."""


class InputError(ComselError, ValueError):
    """Invalid input data: unknown identifiers, malformed values, bad bounds."""


class ContractViolation(ComselError):
    """An operation was invoked outside its stated preconditions."""


class BudgetExceededError(ComselError):
    """Brute-force enumeration would exceed the configured budget."""


class ParseError(InputError):
    """A document failed schema validation.

    Carries a short machine-readable code alongside the human-readable
    message naming the first offending field.
    """

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code
