"""Exception types raised by the planners, the circuit extractor and the I/O layer."""


class EulerError(Exception):
    """Base class for all library errors."""


class NotEulerian(EulerError):
    """Raised when an Euler circuit is requested from a non-Eulerian graph.

    ``condition`` is one of ``"parity"``, ``"connectivity"`` or ``"too_few_edges"``.
    """

    def __init__(self, condition, detail=""):
        self.condition = condition
        self.detail = detail
        msg = f"not Eulerian ({condition})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class NotExtendable(EulerError):
    """No addition-only plan was found."""


class NotReducible(EulerError):
    """No deletion-only plan was found."""


class RepairFailed(EulerError):
    def __init__(self, mode, detail=""):
        self.mode = mode
        super().__init__(f"connectivity repair failed in {mode} mode" + (f": {detail}" if detail else ""))


class InapplicableOp(EulerError):
    def __init__(self, index, op):
        self.index = index
        self.op = op
        super().__init__(f"operation {index} ({op}) cannot be applied")


class FormatError(EulerError, ValueError):
    """Malformed edge-list or plan file; ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
