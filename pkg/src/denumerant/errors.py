"""Exception hierarchy shared by every layer of the package."""


class DenumerantError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(DenumerantError, ValueError):
    """The caller supplied arguments outside an operation's domain."""


class ResourceGuardError(InvalidInputError):
    """A brute-force oracle was asked for a table larger than its guard allows."""


class InternalError(DenumerantError, RuntimeError):
    """An internal consistency check failed.

    These signal a bug (or a violated upstream contract), never bad user input:
    a non-exact division, a non-integral final sum, a zero denominator that
    slipped through slack-variable specialization, and so on.
    """
