"""Exception types raised across the package."""


class GraphError(ValueError):
    """Invalid graph construction input (vertex range, weight domain)."""


class DimacsParseError(GraphError):
    """Malformed DIMACS ``.gr`` input. ``lineno`` is 1-based."""

    def __init__(self, lineno, message):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


class KeyDomainError(ValueError):
    """Negative, NaN or infinite value handed to a key codec."""


class CapacityError(OverflowError):
    """A size or key exceeds what the structure can represent."""


class KeyOverflowError(CapacityError):
    """A distance left the codec's key space during a run."""


class QueueUsageError(RuntimeError):
    """Queue operation that violates its usage contract."""
