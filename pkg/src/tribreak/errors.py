class TriBreakError(Exception):
    """Base class for library errors."""


class GraphFormatError(TriBreakError, ValueError):
    """Malformed or empty edge-list input."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InfeasibleError(TriBreakError, ValueError):
    """Requested number of broken triangles exceeds what the graph holds."""


class PlanMismatchError(TriBreakError, ValueError):
    """A removal plan does not belong to the graph it is checked against."""


class InstanceTooLargeError(TriBreakError, ValueError):
    """Exhaustive search refused because the subset count exceeds the guard."""


class DatasetMissingError(TriBreakError, FileNotFoundError):
    """Benchmark dataset not present in the local cache."""
