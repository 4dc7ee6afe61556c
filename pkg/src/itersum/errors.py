"""Exception hierarchy.

Each class carries the CLI exit code it maps to, so the front end can
translate failures without a lookup table.
"""


class ItersumError(Exception):
    exit_code = 1


class ParseError(ItersumError):
    exit_code = 2


class DimensionError(ItersumError, ValueError):
    exit_code = 2


class SingularMatrixError(ItersumError, ArithmeticError):
    exit_code = 3


class DegenerateHullError(ItersumError):
    exit_code = 3


class HypothesisError(ItersumError):
    """An instance fails a precondition of one of the counting formulas."""

    exit_code = 3

    def __init__(self, predicate, message=None):
        self.predicate = predicate
        super().__init__(message or predicate)


class BudgetError(ItersumError):
    """A brute-force computation would exceed its configured budget."""

    exit_code = 4

    def __init__(self, message, h=None):
        self.h = h
        super().__init__(message)


class MismatchError(ItersumError):
    exit_code = 5


class NotStabilizedError(ItersumError):
    exit_code = 6

    def __init__(self, message, window=None):
        self.window = window
        super().__init__(message)


class ContractError(ItersumError):
    """An operation was called outside its documented precondition."""


class ConsistencyError(ItersumError, AssertionError):
    """An internal identity that must always hold was violated."""
