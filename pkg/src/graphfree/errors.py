"""Exception hierarchy shared by every module of the package."""


class GraphFreeError(Exception):
    """Base class for all errors raised by graphfree."""


class SizeExceedsCap(GraphFreeError, ValueError):
    pass


class SizeMismatch(GraphFreeError, ValueError):
    pass


class GraphInvalid(GraphFreeError, ValueError):
    pass


class LoopEdge(GraphInvalid):
    pass


class DanglingEndpoint(GraphInvalid):
    pass


class DuplicateVertexId(GraphInvalid):
    pass


class UnknownVertex(GraphFreeError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class NotAdmissible(GraphFreeError, ValueError):
    pass


class SpecInvalid(GraphFreeError, ValueError):
    pass


class MissingVertexSpec(SpecInvalid):
    pass


class WordTooLong(GraphFreeError, ValueError):
    pass


class VertexContainmentViolated(GraphFreeError, ValueError):
    pass


class UnknownWord(GraphFreeError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class ContextMismatch(GraphFreeError, ValueError):
    pass


class NotSelfAdjoint(GraphFreeError, ValueError):
    pass


class ShapeMismatch(GraphFreeError, ValueError):
    pass


class ParseError(GraphFreeError, ValueError):
    pass


class UnknownVariable(GraphFreeError, KeyError):
    def __str__(self):
        return Exception.__str__(self)
