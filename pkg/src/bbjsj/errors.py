"""Exception types shared across the package."""


class GraphError(Exception):
    """Base class for every error raised by bbjsj."""


class ParseError(GraphError):
    def __init__(self, line, message="malformed line"):
        self.line = line
        super().__init__(f"line {line}: {message}")


class SimplicialityError(GraphError):
    """Self-loop or repeated edge in an input graph."""


class UnknownVertex(GraphError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class UnknownEdge(GraphError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class DisconnectedInput(GraphError):
    """An operation that needs a connected graph received a disconnected one."""


class SizeLimitExceeded(GraphError):
    """An enumeration hit its configured cap."""


class NotSeparating(GraphError):
    pass


class TooSmall(GraphError):
    pass


class InternalError(GraphError):
    """A checked internal invariant failed. Always a bug."""


class HypothesisViolation(GraphError):
    """The input graph does not satisfy the hypotheses of the requested operation.

    ``hypothesis`` is one of ``"empty"``, ``"not_connected"``,
    ``"flag_not_simply_connected"``, ``"has_cut_vertex"``, ``"complete"``.
    ``witness`` is the offending object: the components, the induced cycle,
    the cut vertices, or the vertex list.
    """

    def __init__(self, hypothesis, witness=None, message=None):
        self.hypothesis = hypothesis
        self.witness = witness
        if message is None:
            message = hypothesis.replace("_", " ")
            if witness is not None:
                message += f": {witness}"
        super().__init__(message)
