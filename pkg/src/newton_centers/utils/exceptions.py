"""
Exceptions and warning categories raised throughout *newton_centers*.

:class:`InputError` subclasses describe problems with what the caller passed
in, :class:`InvariantViolation` subclasses describe a broken mathematical
invariant inside the engine. The command line maps the two families to exit
codes 1 and 2 respectively.
"""
from typing import Optional


class NewtonCentersError(Exception):
    pass


class InputError(NewtonCentersError):
    pass


class InvalidDegreeError(InputError):
    pass


class ZeroPolynomialError(InputError):
    pass


class NoDecompositionError(InputError):
    pass


class EmptyFieldError(InputError):
    pass


class EmptySupportError(InputError):
    pass


class InconsistentEdgeError(InputError):
    pass


class WrongFamilyError(InputError):
    pass


class UndefinedShiftError(InputError):
    pass


class NotAnEquilibriumError(InputError):
    pass


class PreconditionError(InputError):
    pass


class InvalidParameterError(InputError):
    pass


class SystemSyntaxError(InputError):
    """
    Raised when a system description can not be parsed.

    Parameters
    ----------
    message : str
        Human readable description of the problem
    text : str
        The complete input that was being parsed
    position : int, optional
        Character offset of the offending token, by default None
    """

    def __init__(
        self, message: str, text: str = "", position: Optional[int] = None
    ):
        self.text = text
        self.position = position
        super().__init__(message)

    def render(self) -> str:
        """
        Returns the error message followed by the input with a caret under
        the offending position.

        Returns
        -------
        str
            Multi-line error report
        """
        lines = [str(self)]
        if self.text:
            lines.append(f"  {self.text}")
            if self.position is not None:
                lines.append("  " + " " * self.position + "^")
        return "\n".join(lines)


class InvariantViolation(NewtonCentersError):
    pass


class InexactDivisionError(InvariantViolation):
    pass


class DepthBoundExceededError(InvariantViolation):
    pass


class EquivalenceViolationError(InvariantViolation):
    pass


class WitnessVerificationError(InvariantViolation):
    pass


class NumericsWarning(UserWarning):
    pass


class ConcordanceWarning(UserWarning):
    pass
