class BipInfluenceError(Exception):
    """Base class for all errors raised by this package."""


class InputError(BipInfluenceError, ValueError):
    """Bad user input: malformed files, unknown nodes, invalid parameters."""


class InvariantError(BipInfluenceError, RuntimeError):
    """An internal consistency check failed."""
