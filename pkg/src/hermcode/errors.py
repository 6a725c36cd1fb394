"""Exception types shared across the package.

Validation problems derive from :class:`ValueError` so the CLI can map them
to exit code 2.  Size-guard refusals and failed constructive verifications
are kept apart because they get their own exit codes.
"""

from __future__ import annotations


class HermcodeError(Exception):
    """Base class for every error raised by this package."""


class NotPrimePower(HermcodeError, ValueError):
    pass


class RangeError(HermcodeError, ValueError):
    pass


class DomainError(HermcodeError, ValueError):
    pass


class ScopeError(HermcodeError, ValueError):
    """Input lies outside the region where an enumeration is provably complete."""


class FieldMismatch(HermcodeError, ValueError):
    pass


class WrongField(HermcodeError, ValueError):
    pass


class ZeroCode(HermcodeError, ValueError):
    pass


class DivisionByZero(HermcodeError, ZeroDivisionError):
    pass


class SizeGuard(HermcodeError, RuntimeError):
    """An enumeration would exceed its configured size limit."""

    def __init__(self, what: str, size: int, limit: int) -> None:
        super().__init__(
            f"{what}: size {size} exceeds guard {limit} (pass --force-size to override)"
        )
        self.size = size
        self.limit = limit


class LemmaVerificationError(HermcodeError, AssertionError):
    """A constructed code failed its claimed parameters."""
