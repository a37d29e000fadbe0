"""
Exceptions raised by the relfix package.

Checkers report failed properties as verdicts, never as exceptions.
The classes here are reserved for misuse: inputs that violate an
operation's precondition, malformed files and invalid instances.

File:       errors.py
Author:     Lorn B Kerr
Copyright:  (c) 2026 Lorn B Kerr
License:    MIT, see file LICENSE
Version:    1.0.0
"""

from typing import Any

file_version = "1.0.0"
changes = {
    "1.0.0": "Initial release",
}


class RelfixError(Exception):
    """Base class of all relfix errors."""


class ShapeMismatch(RelfixError, ValueError):
    """A distance matrix does not match the number of points."""


class RelationError(RelfixError, ValueError):
    """A relation refers to a point outside its carrier or breaks its tag."""


class MapError(RelfixError, ValueError):
    """A selfmap table is not total over its carrier."""


class NotEquivalence(RelfixError, ValueError):
    """A relation used as an equivalence is not one."""


class NotSymmetric(RelfixError, ValueError):
    """A relation required to be symmetric is not."""


class NotQuasiOrder(RelfixError, ValueError):
    """A relation used as an order is not reflexive and transitive."""


class NotConnectedClass(RelfixError, ValueError):
    """A point set is not a single chain connected equivalence class."""


class NotRegressive(RelfixError, ValueError):
    """A comparison function has phi(t) >= t at a sampled point."""


class NonFiniteValue(RelfixError, ArithmeticError):
    """A numeric map produced a NaN or infinite coordinate."""


class PreconditionError(RelfixError, ValueError):
    """An argument is outside the range an operation accepts."""


class NotInClass(RelfixError, ValueError):
    """A start point is not related to its own image."""


class PremiseFailure(RelfixError):
    """
    A theorem premise required by a construction does not hold.

    Parameters:
        premise (str): the name of the failed premise.
        message (str): optional explanation.
    """

    def __init__(self, premise: str, message: str = "") -> None:
        self.premise: str = premise
        """The name of the failed premise."""
        super().__init__(message or "premise failed: " + premise)


class ParseError(RelfixError):
    """
    An instance file is not well formed.

    Parameters:
        message (str): what went wrong.
        line (int): 1 based line number, 0 when unknown.
        column (int): 1 based column number, 0 when unknown.
    """

    def __init__(self, message: str, line: int = 0, column: int = 0) -> None:
        self.line: int = line
        """Line of the error."""
        self.column: int = column
        """Column of the error."""
        location = ""
        if line:
            location = " (line " + str(line) + ", column " + str(column) + ")"
        super().__init__(message + location)


class ValidationError(RelfixError):
    """
    An instance file is well formed but violates an instance invariant.

    Parameters:
        location (str): the field, or metric axiom, that is violated.
        message (str): what went wrong.
        witness (Any): the offending ids, if any.
    """

    def __init__(self, location: str, message: str, witness: Any = None) -> None:
        self.location: str = location
        """The field or axiom in error."""
        self.witness: Any = witness
        """The offending ids."""
        super().__init__(location + ": " + message)
