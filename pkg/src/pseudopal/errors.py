"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: usage/parse/class errors
exit 2, budget errors exit 3.
"""


class ParseError(ValueError):
    """Malformed directive text; `position` is the 0-based offending index."""

    def __init__(self, message: str, *, position: int | None = None):
        super().__init__(message)
        self.position = position


class StepRangeError(ValueError):
    """A step index beyond what a finite directive provides."""


class ClassMismatchError(ValueError):
    """An operation was applied to a chain of the wrong sequence family."""


class BudgetExceededError(RuntimeError):
    """Generation aborted because a word would exceed the length budget.

    `last_completed` is the largest step index that was fully generated.
    """

    def __init__(self, message: str, *, last_completed: int):
        super().__init__(message)
        self.last_completed = last_completed
