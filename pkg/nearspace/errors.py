from typing import Optional, Tuple


class NearspaceError(Exception):
    """Base class for every error raised by nearspace"""


class InputError(NearspaceError, ValueError):
    """Malformed input: files, flags or parameters"""


class ParseError(InputError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        location = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{location}")


class InvalidTopology(InputError):
    """The open family handed to build_space is not a topology"""


class MissingEmptyOrFull(InvalidTopology):
    pass


class NotClosedUnderUnion(InvalidTopology):
    def __init__(self, left: int, right: int):
        self.witness: Tuple[int, int] = (left, right)
        super().__init__(f"Union of opens {left:#b} and {right:#b} is not open")


class NotClosedUnderIntersection(InvalidTopology):
    def __init__(self, left: int, right: int):
        self.witness: Tuple[int, int] = (left, right)
        super().__init__(f"Intersection of opens {left:#b} and {right:#b} is not open")


class SizeLimitExceeded(NearspaceError):
    pass


class MissingCoordinates(InputError):
    pass


class UnsupportedKind(InputError):
    pass


class UnknownKind(InputError, NotImplementedError):
    pass


class UnknownScenario(InputError, NotImplementedError):
    pass


class PreconditionFailed(NearspaceError, ValueError):
    pass


class NotOpen(InputError):
    pass


class IncompatibleProximity(NearspaceError):
    def __init__(self, message: str, failed_axioms: Tuple[str, ...] = ()):
        self.failed_axioms = failed_axioms
        super().__init__(message)


class NotT1(NearspaceError):
    pass


class UnsupportedConfiguration(NearspaceError):
    pass


class SetupInvalid(NearspaceError):
    def __init__(self, predicate: str, message: str):
        self.predicate = predicate
        super().__init__(f"{predicate}: {message}")
