""" Exceptions raised throughout the package. All of them derive from ValueError since they
signal an input that falls outside of the domain of an operation. """

from typing import Optional, Sequence


class InvalidShapeError(ValueError):
    pass


class InvalidTableauError(ValueError):
    """ Raised when a set of points on a shape violates the tree-like conditions. The
    individual violations are available in 'violations'. """

    def __init__(self, violations: Sequence, message: Optional[str] = None):
        self.violations = list(violations)
        if message is None:
            message = "Not a tree-like tableau: " + "; ".join(str(v) for v in self.violations)
        super().__init__(message)


class AsymmetricTableauError(ValueError):
    pass


class TableauParseError(ValueError):
    """ Raised by the text parsers. 'line' and 'column' are 1-based and None when the
    problem cannot be pinned to a location. """

    def __init__(self, message: str, line: Optional[int] = None,
                 column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}" if column is None else f"line {line}, column {column}"
            message = f"{where}: {message}"
        super().__init__(message)


class BudgetExceededError(ValueError):
    def __init__(self, what: str, requested: int, limit: int, key: str):
        self.requested = requested
        self.limit = limit
        self.key = key
        super().__init__(f"Refusing to enumerate {what} for {requested}: the configured "
                         f"limit is {limit}. Raise '{key}' to go further.")
