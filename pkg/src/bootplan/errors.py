"""Exception types shared across the package.

The CLI maps these onto exit codes: input/structure problems exit 2,
resource caps exit 3.
"""

from __future__ import annotations


class BootplanError(Exception):
    """Base class for every error raised by this package."""


class CycleDetected(BootplanError):
    """The input graph is not acyclic."""


class IndegreeViolation(BootplanError):
    """A vertex has an indegree incompatible with its color."""

    def __init__(self, vertex: int, expected: int, actual: int, name: str | None = None):
        self.vertex = vertex
        self.expected = expected
        self.actual = actual
        label = name if name is not None else f"vertex {vertex}"
        super().__init__(f"{label}: expected indegree {expected}, got {actual}")


class UnknownVertex(BootplanError):
    """An edge or mark references a vertex id that does not exist."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"unknown vertex id {vertex}")


class ParseError(BootplanError):
    """A text input could not be parsed; carries the offending line number."""

    def __init__(self, message: str, source: str = "<input>", line: int | None = None):
        self.source = source
        self.line = line
        where = f"{source}:{line}" if line is not None else source
        super().__init__(f"{where}: {message}")


class CapExceeded(BootplanError):
    """Path enumeration produced more paths than the configured cap."""


class TooLarge(BootplanError):
    """The exhaustive search space exceeds the configured subset cap."""


class IterationLimitExceeded(BootplanError):
    """Row generation did not converge within the iteration cap."""


class NumericalFailure(BootplanError):
    """The LP solver hit a degenerate pivot or failed to make progress."""


class NoFeasibleCandidate(BootplanError):
    """No rounding candidate passed the exact feasibility re-check.

    This signals an internal bug (every candidate is feasible by
    construction); it is surfaced instead of silently repaired.
    """


class InfeasibleInput(BootplanError):
    """A solution handed to a reduction mapping fails its feasibility precondition."""
