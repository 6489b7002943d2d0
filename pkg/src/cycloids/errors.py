"""Exception hierarchy. Every domain failure derives from ``CycloidError``."""


class CycloidError(Exception):
    """Base class for domain errors (the CLI maps these to exit status 1)."""

    code = "cycloid"


class InvalidParamsError(CycloidError, ValueError):
    code = "params"


class SizeLimitError(CycloidError):
    code = "size-limit"


class GuardError(CycloidError, ValueError):
    """A transformation was requested outside its precondition."""

    code = "guard"


class UnknownNodeError(CycloidError, KeyError):
    code = "unknown-node"

    def __str__(self):
        # KeyError.__str__ would repr() the message
        return str(self.args[0]) if self.args else ""


class DisabledTransitionError(CycloidError):
    code = "disabled"


class NoCycleError(CycloidError):
    code = "no-cycle"


class MethodDisagreementError(CycloidError):
    """Two independent computations of the same quantity disagree.

    Carries the full diagnostic in ``details`` so callers can dump it.
    """

    code = "disagreement"

    def __init__(self, message, details=None):
        super().__init__(message)
        self.details = dict(details or {})

    def __str__(self):
        base = super().__str__()
        if not self.details:
            return base
        extra = " ".join(f"{k}={v}" for k, v in self.details.items())
        return f"{base} [{extra}]"
