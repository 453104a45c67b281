"""Exception types shared across the package."""


class UsageError(ValueError):
    """Raised when an operation is invoked with invalid arguments."""


class InputError(ValueError):
    """Raised for malformed external input (JSON files, CLI arguments).

    The message names the offending field.
    """
