"""Exception types raised by the gemkit library.

Everything derives from :class:`GemError` so callers (and the CLI) can catch
domain failures without swallowing genuine programming errors.
"""


class GemError(Exception):
    """Base class for all gemkit domain errors."""


class CodeError(GemError):
    """Base class for code-string decoding failures."""


class BadLengthError(CodeError):
    """Code length is not divisible by three (or is out of range)."""


class BadCharError(CodeError):
    """Code contains a character/token outside the first p letters."""


class NotInvolutionError(CodeError):
    """The implied color pairing is not a fixed-point-free involution."""


class NotBipartiteError(GemError):
    """Operation requires a bipartite graph."""


class NotConnectedError(GemError):
    """Operation requires a connected graph."""


class InvalidLabelingError(GemError):
    """Vertex labeling does not satisfy the encoding conventions."""


class NotAdjacencyPreservingError(GemError):
    """Candidate covering map does not commute with the colored involutions."""


class NonUniformFiberError(GemError):
    """Candidate covering map has fibers of unequal size."""


class NoAdmissibleCoveringError(GemError):
    """No admissible covering of the requested degree exists."""


class CapExceededError(GemError):
    """Requested search exceeds the exhaustive-enumeration cap."""
