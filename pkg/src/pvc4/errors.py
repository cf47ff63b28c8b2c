"""Exception types shared across the package."""


class InvalidInstanceError(ValueError):
    """The (graph, forbidden set, budget) triple violates the input contract.

    Raised when the forbidden set induces a 4-path (such instances are
    infeasible by definition) or when it is not a 4-path vertex cover of
    the graph.
    """


class InvariantViolation(RuntimeError):
    """An internal structural invariant failed; indicates a solver bug."""


class NodeBudgetExceeded(RuntimeError):
    """The search visited more nodes than the configured cap allows."""


class GenerationError(ValueError):
    """An instance generator could not produce a valid output."""


class GraphFormatError(ValueError):
    """Malformed graph file. Carries the 1-based offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
