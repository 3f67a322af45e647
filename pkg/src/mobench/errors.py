"""Exception types shared across the toolkit."""


class InvalidInputError(ValueError):
    """Raised when an operation receives data violating its preconditions."""


class InvalidConfigError(ValueError):
    """Raised when a configuration value is out of its legal range."""


class InvalidStateError(RuntimeError):
    """Raised when an operation is called on an object in the wrong state."""


class EvaluationError(RuntimeError):
    """Raised when an objective evaluator misbehaves (non-finite output,
    wrong arity). Carries the decision vector and the offending objective
    index when known."""

    def __init__(self, message, x=None, objective_index=None):
        super().__init__(message)
        self.x = x
        self.objective_index = objective_index


class UnsupportedProblemError(InvalidInputError):
    """Raised when a feature (e.g. an analytic reference front) does not
    exist for the requested problem."""


class FrontFileError(OSError):
    """Raised when a front CSV file cannot be parsed."""
