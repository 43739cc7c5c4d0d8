"""Exception hierarchy shared by every module."""


class MajColorError(Exception):
    """Base class for all errors raised by majcolor."""


class GraphError(MajColorError, ValueError):
    """Malformed graph input."""


class SelfLoop(GraphError):
    def __init__(self, u):
        super().__init__(f"self-loop at vertex {u}")
        self.vertex = u


class DuplicateEdge(GraphError):
    def __init__(self, u, v):
        super().__init__(f"duplicate edge {{{u}, {v}}}")
        self.u, self.v = u, v


class UnknownVertex(GraphError):
    def __init__(self, v):
        super().__init__(f"unknown vertex {v}")
        self.vertex = v


class PartsSumMismatch(GraphError):
    def __init__(self, u, parts, degree):
        super().__init__(f"parts {list(parts)} of vertex {u} sum to {sum(parts)}, degree is {degree}")
        self.vertex, self.parts, self.degree = u, tuple(parts), degree


class PreconditionError(MajColorError, ValueError):
    """An algorithm was called on an input outside its guarantee."""


class OddDegreeVertex(PreconditionError):
    def __init__(self, v, degree):
        super().__init__(f"vertex {v} has odd degree {degree}")
        self.vertex, self.degree = v, degree


class Disconnected(PreconditionError):
    def __init__(self, detail="graph is not connected"):
        super().__init__(detail)


class PreconditionOddEvenAll(PreconditionError):
    def __init__(self, m):
        super().__init__(
            f"graph has an odd number of edges ({m}) and all degrees even; "
            "use balanced_2coloring_pinned"
        )


class PreconditionNotEulerOdd(PreconditionError):
    pass


class DegreeTooSmall(PreconditionError):
    pass


class DegreeBelowThreshold(PreconditionError):
    pass


class MinDegreeTooLow(PreconditionError):
    def __init__(self, v, degree, required):
        super().__init__(f"minimum degree {degree} < {required} (vertex {v})")
        self.vertex, self.degree, self.required = v, degree, required


class NotFactorCritical(PreconditionError):
    pass


class InternalStructureViolation(MajColorError, RuntimeError):
    """A structural invariant that the theory guarantees did not hold."""


class SelectionInfeasible(MajColorError, RuntimeError):
    def __init__(self, value, needed):
        super().__init__(
            f"max-flow value {value} < |D'| = {needed}; no admissible edge selection"
        )
        self.value, self.needed = value, needed


class Timeout(MajColorError, RuntimeError):
    def __init__(self, max_rounds):
        super().__init__(f"no valid coloring after {max_rounds} resampling rounds")
        self.max_rounds = max_rounds


class ColoringError(MajColorError, ValueError):
    pass


class PartialColoring(ColoringError):
    pass


class ColorOutOfRange(ColoringError):
    pass


class ParseError(MajColorError, ValueError):
    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line


class TooLargeWarning(UserWarning):
    """Exhaustive search requested on a graph beyond the comfortable size."""
