"""Exception types shared across the package."""


class SuperVirError(Exception):
    """Base class for every error raised by supervir."""


class ZeroQ(SuperVirError, ValueError):
    """A specialization point with q0 = 0 (lambda must be nonzero)."""


class NotAUnit(SuperVirError, ArithmeticError):
    """Attempt to invert a scalar that is not a unit of the ring."""


class NotDivisible(SuperVirError, ArithmeticError):
    """Exact division of scalars that does not divide."""


class FamilyMismatch(SuperVirError, ValueError):
    """Ramond and Neveu-Schwarz objects were mixed."""


class DegreeOverflow(SuperVirError, OverflowError):
    """A polynomial or linear system exceeded the hard degree cap."""


class NotInSubmodule(SuperVirError, ValueError):
    """A map defined on a submodule received a vector outside it."""


class ParseError(SuperVirError, ValueError):
    """Malformed expression text.

    Carries the 1-based ``line`` and ``column`` of the offending token and
    the set of tokens that would have been accepted there.
    """

    def __init__(self, message, line=1, column=1, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(sorted(set(expected)))
        detail = f"{message} at line {line}, column {column}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)
