"""Exception types shared across the package."""


class GraphConstructionError(ValueError):
    """Raised for invalid graph construction input (bad order, edge out of range, ...)."""


class Graph6ParseError(ValueError):
    """Raised for malformed graph6 input.  Carries the byte offset of the failure."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class EmbeddingPreconditionError(ValueError):
    """Raised when a pattern cannot possibly be placed (too many non-isolated vertices)."""


class ConnectivityError(ValueError):
    """Raised when an operation requires a connected graph and the input is not."""


class ConvergenceError(RuntimeError):
    """Raised when an iterative numeric routine fails to reach the requested tolerance.

    ``best_estimate`` carries the last iterate so callers can inspect it.
    """

    def __init__(self, message: str, best_estimate: float):
        super().__init__(message)
        self.best_estimate = best_estimate


class BudgetExceededError(RuntimeError):
    """Raised when an enumeration or sweep exceeds its configured budget.

    ``partial`` holds whatever was completed, ``resume_token`` identifies the
    first unit of work that was not finished.
    """

    def __init__(self, message: str, partial=None, resume_token: str = ""):
        super().__init__(message)
        self.partial = partial
        self.resume_token = resume_token


class GadgetUnavailableError(KeyError):
    """Raised when a figure-defined graph is requested but no gadget source provides it."""

    def __init__(self, names):
        self.names = tuple(names)
        super().__init__(f"no gadget entry for: {', '.join(self.names)}")
