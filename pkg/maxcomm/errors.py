"""errors.py
This file is part of maxcomm
Licensed under MIT License

Exception hierarchy shared by every module
"""

__author__ = "maxcomm developers"
__copyright__ = "Copyright 2026, maxcomm developers"
__license__ = "MIT"
__maintainer__ = "maxcomm developers"


class MaxcommError(Exception):
    """Base class for all errors raised by maxcomm."""


class IncompatibleFieldError(MaxcommError, ValueError):
    """Operands live over different ground fields."""


class MalformedInputError(MaxcommError, ValueError):
    """An input document or argument does not have the required shape.

    Args:
        message (str): human readable diagnostic
        location (str): JSON path, line/column or argument name, if known
    """

    def __init__(self, message, location=None):
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)


class MalformedPresentationError(MalformedInputError):
    """A presentation references unknown monomials or cannot be reduced."""


class InconsistentPresentationError(MaxcommError, ValueError):
    """Structure constants violate commutativity, the unit law or associativity."""


class MalformedRepError(MalformedInputError):
    """Image matrices do not fit the algebra or each other."""


class NotLocalError(MaxcommError):
    """The algebra has more than one maximal ideal."""


class FieldTooSmallError(MaxcommError):
    """The characteristic is too small for the trace-form radical."""


class NotCommutativeError(MaxcommError):
    """Two matrices that should commute do not.

    Args:
        pair (tuple): indices of the offending pair
    """

    def __init__(self, pair):
        self.pair = tuple(pair)
        super().__init__(f"matrices {self.pair[0]} and {self.pair[1]} do not commute")


class PreconditionViolationError(MaxcommError):
    """An operation was called outside its precondition.

    Args:
        message (str): what failed
        pair (tuple): the offending (operator, vector) pair, if any
    """

    def __init__(self, message, pair=None):
        self.pair = pair
        super().__init__(message)


class NotSpanningError(MaxcommError):
    """The images of a triple of maps do not span the target."""


class DegeneratePencilError(MaxcommError):
    """No combination of the triple has full rank, or the triple is dependent."""


class NotInOrbitError(MaxcommError):
    """The triple is not equivalent to the canonical triple."""
