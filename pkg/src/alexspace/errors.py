"""Exception hierarchy shared by every module of the package."""


class TopologyError(Exception):
    """Base class for all errors raised by alexspace."""


class ValidationError(TopologyError):
    """A minimal-neighbourhood table does not describe a topology."""


class ReflexivityViolation(ValidationError):
    def __init__(self, x: int):
        self.x = x
        super().__init__(f"point {x} is not in its own neighbourhood")


class TransitivityViolation(ValidationError):
    def __init__(self, x: int, y: int):
        self.x = x
        self.y = y
        super().__init__(
            f"({x}, {y}): {y} lies in nbhd({x}) "
            f"but nbhd({y}) is not contained in nbhd({x})"
        )


class UniverseMismatch(TopologyError):
    """Point sets over different universes were combined."""


class CapacityExceeded(TopologyError):
    """A size limit (points, enumeration order, oracle scan) was exceeded."""


class TooManyOpens(CapacityExceeded):
    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"more than {cap} open sets")


class OracleCapExceeded(CapacityExceeded):
    pass


class BadRange(TopologyError):
    pass


class TopoSyntaxError(TopologyError):
    """Malformed .topo text; ``line`` is 1-based."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class PreconditionViolated(TopologyError):
    def __init__(self, clause: str):
        self.clause = clause
        super().__init__(clause)


class InternalProofStepFailed(TopologyError):
    """The argument being mechanised broke down on a concrete instance."""


class UnknownPredicate(TopologyError):
    def __init__(self, name: str, position: int | None = None):
        self.name = name
        self.position = position
        super().__init__(f"{name!r}")


class ExprSyntaxError(TopologyError):
    def __init__(self, position: int, message: str):
        self.position = position
        super().__init__(f"syntax error at position {position}: {message}")
