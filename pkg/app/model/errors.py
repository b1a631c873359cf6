from typing import Sequence


class SchedulingError(ValueError):
    """Base class for invalid scheduling inputs (graphs, chromosomes, fitness lists)."""


class SelfLoopError(SchedulingError):
    def __init__(self, task: int):
        self.task = task
        super().__init__(f"Task {task} depends on itself")


class CycleError(SchedulingError):
    def __init__(self, tasks: Sequence[int]):
        self.tasks = list(tasks)
        super().__init__(f"Dependency cycle among tasks {self.tasks}")


class CrossApplicationEdgeError(SchedulingError):
    def __init__(self, child: int, parent: int):
        self.child = child
        self.parent = parent
        super().__init__(
            f"Task {child} depends on task {parent} of a different application"
        )


class LengthMismatchError(SchedulingError):
    def __init__(self, expected: int, actual: int):
        self.expected = expected
        self.actual = actual
        super().__init__(f"Expected length {expected}, got {actual}")


class GeneRangeError(SchedulingError):
    def __init__(self, position: int, value: int, clouds: int):
        self.position = position
        self.value = value
        super().__init__(
            f"Gene at position {position} is {value}, outside [0, {clouds})"
        )


class ZeroFitnessError(SchedulingError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"Fitness at index {index} is not strictly positive")


class DataFormatError(ValueError):
    """Base class for malformed instance, dependency and schedule files."""


class TokenCountError(DataFormatError):
    def __init__(self, expected: int, actual: int, source: str = ""):
        self.expected = expected
        self.actual = actual
        where = f" in {source}" if source else ""
        super().__init__(f"Expected {expected} values{where}, found {actual}")


class NonNumericError(DataFormatError):
    def __init__(self, line: int, token: str):
        self.line = line
        super().__init__(f"Line {line}: {token!r} is not a number")


class NonBinaryError(DataFormatError):
    def __init__(self, row: int, col: int, token: str):
        self.row = row
        self.col = col
        super().__init__(f"Dependency cell ({row}, {col}) is {token!r}, expected 0 or 1")


class PositivityError(DataFormatError):
    def __init__(self, row: int, col: int, value: float):
        self.row = row
        self.col = col
        super().__init__(
            f"ETC cell ({row}, {col}) is {value}, expected a positive finite duration"
        )


class ConfigError(ValueError):
    """Invalid command-line flags or configuration file content."""


class InvariantViolationError(RuntimeError):
    """An internal guarantee (such as elitism monotonicity) did not hold."""
