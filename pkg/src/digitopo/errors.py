"""Exception hierarchy shared by every module."""


class DigitalTopologyError(Exception):
    """Base class for all errors raised by digitopo."""


class UnknownVertexError(DigitalTopologyError, KeyError):
    def __init__(self, vertex):
        super().__init__(vertex)
        self.vertex = vertex

    def __str__(self):
        return f"unknown vertex {self.vertex!r}"


class NotAnEdgeError(DigitalTopologyError, ValueError):
    def __init__(self, u, v):
        super().__init__(u, v)
        self.edge = (u, v)

    def __str__(self):
        return f"{self.edge[0]!r} and {self.edge[1]!r} are not adjacent"


class CapExceededError(DigitalTopologyError):
    """A search or enumeration was asked to run above its configured size cap."""

    def __init__(self, what, size, cap):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class BudgetExceededError(DigitalTopologyError):
    """Node budget exhausted; the answer is unknown, not negative."""


class PreconditionError(DigitalTopologyError, ValueError):
    pass


class ReplayError(DigitalTopologyError):
    """Certificate replay failed.  ``step`` is the zero-based failing step, or None."""

    def __init__(self, message, step=None):
        if step is not None:
            message = f"step {step}: {message}"
        super().__init__(message)
        self.step = step


class KeyMismatchError(ReplayError):
    pass


class InconsistencyError(DigitalTopologyError):
    """A situation the theory rules out was reached; indicates a bug or bad input."""
