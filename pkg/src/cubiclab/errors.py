"""Exception hierarchy shared by every cubiclab module."""


class LabError(Exception):
    """Base class for all errors raised by cubiclab."""


class ModulusMismatchError(LabError, ValueError):
    """Operands live over different prime fields (a configuration error)."""


class InvalidInputError(LabError, ValueError):
    """An operation's precondition does not hold for the given input."""


class GuardExceededError(LabError, RuntimeError):
    """A brute-force routine refused to run because a size guard was exceeded.

    Refusals are configuration errors, never skipped checks.
    """
