"""Exception types shared across the package."""


class AmsymError(Exception):
    """Base class for all package errors."""


class SizeMismatchError(AmsymError, ValueError):
    pass


class NotARimHookError(AmsymError, ValueError):
    pass


class NoHookWrapError(AmsymError, ValueError):
    """No partition is obtained by wrapping the requested hook onto the base."""


class AmbiguousHookWrapError(AmsymError, ValueError):
    """More than one partition is obtained by wrapping the requested hook."""


class NotHeightZeroError(AmsymError, ValueError):
    pass


class InvalidBlockError(AmsymError, ValueError):
    pass


class ResourceError(AmsymError):
    """A computation would exceed the configured group-order or level budget."""


class TheoryViolation(AmsymError, AssertionError):
    """An internal consistency check derived from the theory failed.

    Raised instead of silently returning when, for example, two independent
    height computations disagree or an expected unique constituent is not
    unique.
    """
