"""Exception hierarchy shared by the library and the CLI."""
from typing import Optional


class IRTSError(Exception):
    """Base class for every failure the toolkit reports."""


class NetworkFormatError(IRTSError):
    """A network or task record is malformed or violates a network invariant."""

    def __init__(self, message: str, line: Optional[int] = None, record: Optional[str] = None):
        self.line = line
        self.record = record
        where = f"line {line}: " if line is not None else ""
        shown = f" [{record}]" if record else ""
        super().__init__(f"{where}{message}{shown}")


class EdgeNotFoundError(IRTSError):
    """The requested edge does not exist in the network."""


class UnreachableError(IRTSError):
    """No path connects the two requested vertices."""


class TaskGraphError(IRTSError):
    """A task-graph path uses an edge the graph does not contain."""


class OracleLimitExceeded(IRTSError):
    """Brute-force enumeration would exceed its configured limits."""


class ScenarioGenerationError(IRTSError):
    """A benchmark scenario could not be drawn from the network."""


class InstanceTooLargeError(IRTSError):
    """The exact solver refuses an instance it cannot finish in practice."""


class UnknownVertexError(IRTSError):
    """A vertex id does not exist in the network."""


class UnknownSolverError(IRTSError):
    """The requested solver name is not registered."""
