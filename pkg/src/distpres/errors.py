"""Exception types raised across the package."""


class GraphError(Exception):
    """Base class for all errors raised by distpres."""


class OutOfRange(GraphError, ValueError):
    pass


class SelfLoop(GraphError, ValueError):
    pass


class EmptySet(GraphError, ValueError):
    pass


class Disconnected(GraphError, ValueError):
    """Raised when an operation requires a connected graph."""

    def __init__(self, message: str, components: int | None = None):
        super().__init__(message)
        self.components = components


class TooLarge(GraphError, ValueError):
    pass


class NotCutVertex(GraphError, ValueError):
    pass


class OverlappingConstraint(GraphError, ValueError):
    pass


class InvalidSpec(GraphError, ValueError):
    pass


class ParseError(GraphError, ValueError):
    """Malformed edge-list or graph6 input.

    ``offset`` is the byte offset of the problem inside the record and
    ``record`` the zero-based record index when reading multi-record input.
    """

    def __init__(self, reason: str, offset: int | None = None, record: int | None = None):
        where = []
        if record is not None:
            where.append(f"record {record}")
        if offset is not None:
            where.append(f"offset {offset}")
        msg = f"{reason} ({', '.join(where)})" if where else reason
        super().__init__(msg)
        self.reason = reason
        self.offset = offset
        self.record = record
