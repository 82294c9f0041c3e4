"""Exception types shared across the package."""


class TropigraphError(Exception):
    """Base class for every error raised by tropigraph."""


class MixedInfinity(TropigraphError):
    """Tropical product of +inf and -inf requested; it is undefined."""


class DimensionMismatch(TropigraphError):
    """Vectors of different lengths fed to a coordinate-wise operation."""


class VertexCountMismatch(TropigraphError):
    """Set operation on graphs with different vertex counts."""


class VertexMismatch(TropigraphError):
    """Representation and graph disagree on the vertex set."""


class BadParameter(TropigraphError):
    """A generator or operation parameter is out of its allowed range."""


class BadSpec(TropigraphError):
    """A caterpillar description is malformed or does not match the graph."""


class ParseError(TropigraphError):
    """Malformed graph6, edge-list, or JSON input."""


class TooLarge(TropigraphError):
    """Input exceeds the configured exact-search limit."""


class NotThreshold(TropigraphError):
    """Operation requires a threshold graph but the input is not one."""


class InvalidCover(TropigraphError):
    """A cover witness does not satisfy its union/intersection invariants."""


class InvalidInputRepresentation(TropigraphError):
    """An input representation violates the preconditions of a construction."""
